#include "klc/matrix_module.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace klc {

IntMatrix MatrixModule::sum() const {
  IntMatrix out = IntMatrix::Zero(rank, rank);
  for (const auto& m : matrices) out += m;
  return out;
}

std::vector<std::int64_t> MatrixModule::traces() const {
  std::vector<std::int64_t> out;
  for (const auto& m : matrices) out.push_back(m.trace());
  return out;
}

std::vector<std::int64_t> MatrixModule::flatten() const {
  std::vector<std::int64_t> out;
  out.reserve(matrices.size() * rank * rank);
  for (const auto& m : matrices)
    for (int i = 0; i < rank; ++i)
      for (int j = 0; j < rank; ++j) out.push_back(m(i, j));
  return out;
}

bool operator==(const MatrixModule& a, const MatrixModule& b) {
  return a.rank == b.rank && a.matrices.size() == b.matrices.size() && a.flatten() == b.flatten();
}

bool operator<(const MatrixModule& a, const MatrixModule& b) {
  if (a.rank != b.rank) return a.rank < b.rank;
  return a.flatten() < b.flatten();
}

MatrixModule zero_module(const BasedRing& ring, int rank) {
  if (rank < 1) throw std::invalid_argument("zero_module: rank must be positive");
  MatrixModule out{rank, std::vector<IntMatrix>(ring.size(), IntMatrix::Zero(rank, rank))};
  out.matrices[ring.identity_index] = IntMatrix::Identity(rank, rank);
  return out;
}

bool satisfies_relations(const BasedRing& ring, const MatrixModule& module) {
  if (static_cast<int>(module.matrices.size()) != ring.size()) return false;
  for (const auto& m : module.matrices) {
    if (m.rows() != module.rank || m.cols() != module.rank) return false;
    if ((m.array() < 0).any()) return false;
  }
  if (module.matrices[ring.identity_index] != IntMatrix::Identity(module.rank, module.rank)) {
    return false;
  }
  for (int x = 0; x < ring.size(); ++x) {
    for (int y = 0; y < ring.size(); ++y) {
      IntMatrix rhs = IntMatrix::Zero(module.rank, module.rank);
      for (int z = 0; z < ring.size(); ++z) rhs += ring.c(x, y, z) * module.matrices[z];
      if (module.matrices[x] * module.matrices[y] != rhs) return false;
    }
  }
  return true;
}

bool is_transitive(const MatrixModule& module) { return (module.sum().array() > 0).all(); }

bool is_faithful(const BasedRing& ring, const MatrixModule& module) {
  for (int x = 0; x < ring.size(); ++x) {
    if (x != ring.identity_index && !module.matrices[x].isZero()) return true;
  }
  return false;
}

MatrixModule permute(const MatrixModule& module, const std::vector<int>& perm) {
  MatrixModule out = module;
  for (std::size_t k = 0; k < module.matrices.size(); ++k) {
    for (int i = 0; i < module.rank; ++i)
      for (int j = 0; j < module.rank; ++j)
        out.matrices[k](perm[i], perm[j]) = module.matrices[k](i, j);
  }
  return out;
}

MatrixModule canonical(const MatrixModule& module) {
  std::vector<int> perm(module.rank);
  std::iota(perm.begin(), perm.end(), 0);
  MatrixModule best = module;
  auto best_key = best.flatten();
  while (std::next_permutation(perm.begin(), perm.end())) {
    MatrixModule candidate = permute(module, perm);
    auto key = candidate.flatten();
    if (key < best_key) {
      best_key = std::move(key);
      best = std::move(candidate);
    }
  }
  return best;
}

std::string format_matrix(const IntMatrix& m) {
  std::ostringstream out;
  out << "(";
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    out << (i ? "; " : "");
    for (Eigen::Index j = 0; j < m.cols(); ++j) out << (j ? " " : "") << m(i, j);
  }
  out << ")";
  return out.str();
}

}  // namespace klc
