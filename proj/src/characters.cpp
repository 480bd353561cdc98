#include "klc/characters.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <optional>
#include <stdexcept>

#include <Eigen/Eigenvalues>
#include <Eigen/LU>

namespace klc {

namespace {

constexpr double kFloatTolerance = 1e-9;

using Partial = std::vector<std::optional<QuadNum>>;

struct ExactSolveFailed {};

// Value forced on `x` by a product y * x with chi(y) known and every other
// summand known, when chi(y) differs from c[y,x,x].
std::optional<QuadNum> linear_value(const BasedRing& ring, const Partial& chi, int x) {
  for (int y = 0; y < ring.size(); ++y) {
    if (!chi[y] || y == x) continue;
    QuadNum pivot = *chi[y] - QuadNum(ring.c(y, x, x));
    if (pivot.is_zero()) continue;
    QuadNum rhs(0);
    bool known = true;
    for (int z = 0; z < ring.size() && known; ++z) {
      if (z == x || ring.c(y, x, z) == 0) continue;
      if (!chi[z]) known = false;
      else rhs += QuadNum(ring.c(y, x, z)) * *chi[z];
    }
    if (known) return rhs / pivot;
  }
  return std::nullopt;
}

void extend(const BasedRing& ring, Partial& chi, std::vector<std::vector<QuadNum>>& out) {
  const int size = ring.size();
  auto unassigned = [&] {
    std::vector<int> v;
    for (int x = 0; x < size; ++x)
      if (!chi[x]) v.push_back(x);
    return v;
  }();
  if (unassigned.empty()) {
    std::vector<QuadNum> row;
    for (auto& v : chi) row.push_back(*v);
    out.push_back(std::move(row));
    return;
  }
  for (int x : unassigned) {
    if (auto v = linear_value(ring, chi, x)) {
      chi[x] = *v;
      extend(ring, chi, out);
      chi[x].reset();
      return;
    }
  }
  // chi(x)^2 = c[x,x,x] chi(x) + sum_{z != x} c[x,x,z] chi(z)
  for (int x : unassigned) {
    QuadNum q(0);
    bool known = true;
    for (int z = 0; z < size && known; ++z) {
      if (z == x || ring.c(x, x, z) == 0) continue;
      if (!chi[z]) known = false;
      else q += QuadNum(ring.c(x, x, z)) * *chi[z];
    }
    if (!known) continue;
    if (!q.is_rational()) throw ExactSolveFailed{};
    std::array<QuadNum, 2> roots;
    try {
      roots = solve_quadratic_monic(Rational(ring.c(x, x, x)), q.rational_part());
    } catch (const std::domain_error&) {
      return;  // no real value on this branch
    }
    for (int r = 0; r < 2; ++r) {
      if (r == 1 && roots[1] == roots[0]) break;
      chi[x] = roots[r];
      extend(ring, chi, out);
    }
    chi[x].reset();
    return;
  }
  throw ExactSolveFailed{};
}

std::vector<CharacterRow> exact_rows(const BasedRing& ring) {
  Partial chi(ring.size());
  chi[ring.identity_index] = QuadNum(1);
  std::vector<std::vector<QuadNum>> found;
  extend(ring, chi, found);
  std::vector<CharacterRow> rows;
  for (auto& values : found) {
    if (!is_multiplicative(ring, values)) continue;
    if (std::any_of(rows.begin(), rows.end(), [&](const auto& r) { return r.values == values; })) {
      continue;
    }
    CharacterRow row;
    for (const auto& v : values) row.approx.push_back(v.to_double());
    row.values = std::move(values);
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix<double> left_regular(const BasedRing& ring, int b) {
  Matrix<double> m = Matrix<double>::Zero(ring.size(), ring.size());
  for (int y = 0; y < ring.size(); ++y)
    for (int z = 0; z < ring.size(); ++z) m(z, y) = static_cast<double>(ring.c(b, y, z));
  return m;
}

std::vector<CharacterRow> floating_rows(const BasedRing& ring) {
  const int size = ring.size();
  std::vector<Matrix<double>> regular;
  Matrix<double> generic = Matrix<double>::Zero(size, size);
  for (int b = 0; b < size; ++b) {
    regular.push_back(left_regular(ring, b));
    generic += (1.0 + 0.6180339887 * b + 0.1 * b * b) * regular.back();
  }
  Eigen::EigenSolver<Matrix<double>> solver(generic);
  if (solver.info() != Eigen::Success) throw std::domain_error("character_table: eigensolver failed");
  std::vector<CharacterRow> rows;
  for (int k = 0; k < size; ++k) {
    Eigen::VectorXcd v = solver.eigenvectors().col(k);
    CharacterRow row;
    row.exact = false;
    for (int b = 0; b < size; ++b) {
      std::complex<double> value =
          v.dot(regular[b].cast<std::complex<double>>() * v) / v.squaredNorm();
      if (std::abs(value.imag()) > 1e-7) {
        throw std::domain_error("character_table: non-real character value");
      }
      row.approx.push_back(value.real());
    }
    rows.push_back(std::move(row));
  }
  for (const auto& row : rows) {
    for (int x = 0; x < size; ++x) {
      for (int y = 0; y < size; ++y) {
        double rhs = 0;
        for (int z = 0; z < size; ++z) rhs += ring.c(x, y, z) * row.approx[z];
        if (std::abs(row.approx[x] * row.approx[y] - rhs) > 1e-6 * (1 + std::abs(rhs))) {
          throw std::domain_error("character_table: ring is not split semisimple");
        }
      }
    }
  }
  return rows;
}

// Each chi_i(b) is an eigenvalue of the integral matrix of left multiplication
// by b, and the chi_j(b) run through all of them. A quadratic irrational
// value therefore pairs with its conjugate among them; integers stand alone.
// Proposals are only kept if the whole row is multiplicative exactly.
std::optional<QuadNum> recognize(double v, const std::vector<double>& eigenvalues) {
  const double r = std::round(v);
  if (std::abs(v - r) < kFloatTolerance) return QuadNum(static_cast<std::int64_t>(r));
  for (double w : eigenvalues) {
    const double p = std::round(v + w);
    const double q = std::round(-v * w);
    if (std::abs(v + w - p) > kFloatTolerance || std::abs(v * w + q) > kFloatTolerance) continue;
    try {
      for (const auto& root : solve_quadratic_monic(Rational(static_cast<std::int64_t>(p)),
                                                    Rational(static_cast<std::int64_t>(q)))) {
        if (!root.is_rational() && std::abs(root.to_double() - v) < kFloatTolerance) return root;
      }
    } catch (const std::domain_error&) {
    }
  }
  return std::nullopt;
}

void promote_to_exact(const BasedRing& ring, std::vector<CharacterRow>& rows) {
  for (auto& row : rows) {
    std::vector<QuadNum> values;
    for (int b = 0; b < ring.size(); ++b) {
      std::vector<double> eigenvalues;
      for (const auto& other : rows) eigenvalues.push_back(other.approx[b]);
      auto value = recognize(row.approx[b], eigenvalues);
      if (!value) break;
      values.push_back(*value);
    }
    if (static_cast<int>(values.size()) != ring.size() || !is_multiplicative(ring, values)) {
      for (auto& v : row.approx) {
        if (std::abs(v - std::round(v)) < kFloatTolerance) v = std::round(v);
      }
      continue;
    }
    row.approx.clear();
    for (const auto& v : values) row.approx.push_back(v.to_double());
    row.values = std::move(values);
    row.exact = true;
  }
}

bool row_less(const CharacterRow& a, const CharacterRow& b) {
  for (std::size_t i = 0; i < a.approx.size(); ++i) {
    if (a.exact && b.exact) {
      auto c = compare(a.values[i], b.values[i]);
      if (c != 0) return c < 0;
    } else if (std::abs(a.approx[i] - b.approx[i]) > kFloatTolerance) {
      return a.approx[i] < b.approx[i];
    }
  }
  return false;
}

bool rows_distinct(const std::vector<CharacterRow>& rows) {
  for (std::size_t i = 0; i + 1 < rows.size(); ++i) {
    if (!row_less(rows[i], rows[i + 1]) && !row_less(rows[i + 1], rows[i])) return false;
  }
  return true;
}

// Solves A m = t over QuadNum by Gaussian elimination; A is square.
std::vector<QuadNum> solve_exact(std::vector<std::vector<QuadNum>> a, std::vector<QuadNum> t) {
  const std::size_t n = t.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col].is_zero()) ++pivot;
    if (pivot == n) throw std::domain_error("decompose: character table is singular");
    std::swap(a[pivot], a[col]);
    std::swap(t[pivot], t[col]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col].is_zero()) continue;
      QuadNum f = a[r][col] / a[col][col];
      for (std::size_t k = col; k < n; ++k) a[r][k] -= f * a[col][k];
      t[r] -= f * t[col];
    }
  }
  std::vector<QuadNum> m(n);
  for (std::size_t i = 0; i < n; ++i) m[i] = t[i] / a[i][i];
  return m;
}

}  // namespace

bool CharacterTable::exact() const {
  return std::all_of(rows.begin(), rows.end(), [](const auto& r) { return r.exact; });
}

int CharacterTable::trivial_row() const {
  for (std::size_t i = 0; i < rows.size(); ++i) {
    bool trivial = true;
    for (int b = 0; b < ring.size() && trivial; ++b) {
      if (b == ring.identity_index) continue;
      trivial = rows[i].exact ? rows[i].values[b].is_zero()
                              : std::abs(rows[i].approx[b]) < kFloatTolerance;
    }
    if (trivial) return static_cast<int>(i);
  }
  return -1;
}

bool is_multiplicative(const BasedRing& ring, const std::vector<QuadNum>& values) {
  if (values[ring.identity_index] != QuadNum(1)) return false;
  try {
    for (int x = 0; x < ring.size(); ++x) {
      for (int y = 0; y < ring.size(); ++y) {
        QuadNum rhs(0);
        for (int z = 0; z < ring.size(); ++z) {
          if (ring.c(x, y, z) != 0) rhs += QuadNum(ring.c(x, y, z)) * values[z];
        }
        if (!(values[x] * values[y] == rhs)) return false;
      }
    }
  } catch (const std::domain_error&) {
    return false;
  }
  return true;
}

CharacterTable character_table(const BasedRing& ring) {
  if (!ring.is_commutative()) throw std::domain_error("character_table: ring is not commutative");
  CharacterTable table{ring, {}};
  try {
    table.rows = exact_rows(ring);
  } catch (const ExactSolveFailed&) {
    table.rows = floating_rows(ring);
    promote_to_exact(ring, table.rows);
  } catch (const std::domain_error&) {
    // mixed quadratic fields along one branch
    table.rows = floating_rows(ring);
    promote_to_exact(ring, table.rows);
  }
  std::sort(table.rows.begin(), table.rows.end(), row_less);
  if (static_cast<int>(table.rows.size()) != ring.size() || !rows_distinct(table.rows)) {
    throw std::domain_error("character_table: found " + std::to_string(table.rows.size()) +
                            " distinct real characters for a ring of rank " +
                            std::to_string(ring.size()) +
                            "; the spectrum is not real and simple");
  }
  return table;
}

ModuleDecomposition decompose_traces(const CharacterTable& table,
                                     std::span<const std::int64_t> traces) {
  const int size = table.ring.size();
  if (static_cast<int>(traces.size()) != size) {
    throw std::invalid_argument("decompose: one trace per basis element required");
  }
  ModuleDecomposition out;
  if (table.exact()) {
    std::vector<std::vector<QuadNum>> a(size, std::vector<QuadNum>(size));
    std::vector<QuadNum> t;
    for (int b = 0; b < size; ++b) {
      for (int i = 0; i < size; ++i) a[b][i] = table.rows[i].values[b];
      t.emplace_back(traces[b]);
    }
    for (const auto& m : solve_exact(std::move(a), std::move(t))) {
      if (!m.is_integer()) {
        throw std::domain_error("decompose: non-integral multiplicity " + m.to_string());
      }
      const auto value = m.rational_part().convert_to<std::int64_t>();
      if (value < 0) throw std::domain_error("decompose: negative multiplicity");
      out.multiplicities.push_back(value);
    }
    return out;
  }
  Matrix<double> a(size, size);
  Vector<double> t(size);
  for (int b = 0; b < size; ++b) {
    for (int i = 0; i < size; ++i) a(b, i) = table.rows[i].approx[b];
    t(b) = static_cast<double>(traces[b]);
  }
  Vector<double> m = a.fullPivLu().solve(t);
  for (int i = 0; i < size; ++i) {
    const double r = std::round(m(i));
    if (std::abs(m(i) - r) > 1e-6) throw std::domain_error("decompose: non-integral multiplicity");
    if (r < 0) throw std::domain_error("decompose: negative multiplicity");
    out.multiplicities.push_back(static_cast<std::int64_t>(r));
  }
  return out;
}

ModuleDecomposition decompose(const CharacterTable& table, const MatrixModule& module) {
  if (static_cast<int>(module.matrices.size()) != table.ring.size()) {
    throw std::invalid_argument("decompose: module does not match the ring");
  }
  if (module.matrices[table.ring.identity_index] != IntMatrix::Identity(module.rank, module.rank)) {
    throw std::invalid_argument("decompose: identity must act as the identity matrix");
  }
  const auto traces = module.traces();
  return decompose_traces(table, traces);
}

std::vector<QuadNum> profile_traces(const CharacterTable& table,
                                    std::span<const std::int64_t> multiplicities) {
  if (!table.exact()) throw std::domain_error("profile_traces: character table is not exact");
  std::vector<QuadNum> out(table.ring.size(), QuadNum(0));
  for (std::size_t i = 0; i < multiplicities.size(); ++i) {
    if (multiplicities[i] == 0) continue;
    for (int b = 0; b < table.ring.size(); ++b) {
      out[b] += QuadNum(multiplicities[i]) * table.rows[i].values[b];
    }
  }
  return out;
}

int special_character(const CharacterTable& table) {
  const int count = static_cast<int>(table.rows.size());
  int best = -1;
  bool tie = false;
  if (table.exact()) {
    std::vector<QuadNum> magnitude;
    for (const auto& row : table.rows) {
      QuadNum total(0);
      for (const auto& v : row.values) total += v;
      magnitude.push_back(total.abs());
    }
    for (int i = 0; i < count; ++i) {
      if (best < 0 || magnitude[i] > magnitude[best]) {
        best = i;
        tie = false;
      } else if (magnitude[i] == magnitude[best]) {
        tie = true;
      }
    }
  } else {
    std::vector<double> magnitude;
    for (const auto& row : table.rows) {
      double total = 0;
      for (double v : row.approx) total += v;
      magnitude.push_back(std::abs(total));
    }
    for (int i = 0; i < count; ++i) {
      if (best < 0 || magnitude[i] > magnitude[best] + kFloatTolerance) {
        best = i;
        tie = false;
      } else if (std::abs(magnitude[i] - magnitude[best]) <= kFloatTolerance) {
        tie = true;
      }
    }
  }
  if (best < 0 || tie) throw std::domain_error("special_character: maximum is not unique");
  return best;
}

}  // namespace klc
