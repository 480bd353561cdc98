#include "klc/klring.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

namespace klc {

GroupAlgebraElement::GroupAlgebraElement(const GroupParams& params)
    : params_(params), coeffs_(params.order()) {}

GroupAlgebraElement::GroupAlgebraElement(const GroupParams& params, const DihedralElement& el)
    : GroupAlgebraElement(params) {
  (*this)[el] = 1;
}

const BigInt& GroupAlgebraElement::operator[](const DihedralElement& el) const {
  return coeffs_[element_index(params_, el)];
}

BigInt& GroupAlgebraElement::operator[](const DihedralElement& el) {
  return coeffs_[element_index(params_, el)];
}

GroupAlgebraElement& GroupAlgebraElement::operator+=(const GroupAlgebraElement& other) {
  if (!(params_ == other.params_)) throw std::invalid_argument("group algebra: mismatched n");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  return *this;
}

GroupAlgebraElement& GroupAlgebraElement::operator-=(const GroupAlgebraElement& other) {
  if (!(params_ == other.params_)) throw std::invalid_argument("group algebra: mismatched n");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  return *this;
}

GroupAlgebraElement operator*(const GroupAlgebraElement& x, const GroupAlgebraElement& y) {
  if (!(x.params_ == y.params_)) throw std::invalid_argument("group algebra: mismatched n");
  const auto elements = enumerate_elements(x.params_);
  GroupAlgebraElement out(x.params_);
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (x.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < elements.size(); ++j) {
      if (y.coeffs_[j] == 0) continue;
      out[multiply(x.params_, elements[i], elements[j])] += x.coeffs_[i] * y.coeffs_[j];
    }
  }
  return out;
}

GroupAlgebraElement operator*(const BigInt& k, GroupAlgebraElement x) {
  for (auto& c : x.coeffs_) c *= k;
  return x;
}

GroupAlgebraElement kl_basis_element(const GroupParams& params, const DihedralElement& w) {
  GroupAlgebraElement out(params);
  for (const auto& v : enumerate_elements(params)) {
    if (bruhat_leq(params, v, w)) out[v] = 1;
  }
  return out;
}

std::vector<BigInt> to_kl_coords(const GroupParams& params, const GroupAlgebraElement& x) {
  const auto elements = enumerate_elements(params);
  GroupAlgebraElement rest = x;
  std::vector<BigInt> coords(elements.size());
  // Enumeration order is by length, so walking it backwards visits every w
  // before anything below it in Bruhat order.
  for (int i = static_cast<int>(elements.size()) - 1; i >= 0; --i) {
    const BigInt a = rest.coeff(i);
    if (a == 0) continue;
    coords[i] = a;
    rest -= a * kl_basis_element(params, elements[i]);
  }
  return coords;
}

int KLStructureConstants::index_of(const std::string& label) const {
  auto it = std::find(labels.begin(), labels.end(), label);
  if (it == labels.end()) throw std::out_of_range("unknown Kazhdan-Lusztig label '" + label + "'");
  return static_cast<int>(it - labels.begin());
}

KLStructureConstants structure_constants(const GroupParams& params) {
  KLStructureConstants out{params, enumerate_elements(params), {}, StructureTensor(params.order())};
  std::vector<GroupAlgebraElement> basis;
  for (const auto& w : out.elements) {
    out.labels.push_back(w.label());
    basis.push_back(kl_basis_element(params, w));
  }
  const int size = params.order();
  for (int x = 0; x < size; ++x) {
    for (int y = 0; y < size; ++y) {
      const auto coords = to_kl_coords(params, basis[x] * basis[y]);
      for (int z = 0; z < size; ++z) {
        if (coords[z] < 0) {
          throw std::logic_error("structure_constants: negative coefficient of " +
                                 out.labels[z] + " in " + out.labels[x] + " * " +
                                 out.labels[y] + " for n = " + std::to_string(params.n()));
        }
        out.c(x, y, z) = coords[z].convert_to<std::int64_t>();
      }
    }
  }
  return out;
}

std::shared_ptr<const KLStructureConstants> cached_structure_constants(int n) {
  static std::mutex mutex;
  static std::map<int, std::shared_ptr<const KLStructureConstants>> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(n); it != cache.end()) return it->second;
  }
  // Built outside the lock; concurrent builders produce equal tables and the
  // first one stored wins.
  auto built = std::make_shared<const KLStructureConstants>(structure_constants(GroupParams(n)));
  std::lock_guard lock(mutex);
  return cache.emplace(n, std::move(built)).first->second;
}

namespace {

using Relation = std::vector<std::vector<bool>>;

void close_transitively(Relation& r) {
  const std::size_t size = r.size();
  for (std::size_t i = 0; i < size; ++i) r[i][i] = true;
  for (std::size_t k = 0; k < size; ++k) {
    for (std::size_t i = 0; i < size; ++i) {
      if (!r[i][k]) continue;
      for (std::size_t j = 0; j < size; ++j) {
        if (r[k][j]) r[i][j] = true;
      }
    }
  }
}

CellOrder cells_from_preorder(Relation r) {
  close_transitively(r);
  const int size = static_cast<int>(r.size());
  CellOrder out;
  out.cell_of.assign(size, -1);
  for (int i = 0; i < size; ++i) {
    if (out.cell_of[i] >= 0) continue;
    const int id = static_cast<int>(out.cells.size());
    out.cells.emplace_back();
    for (int j = i; j < size; ++j) {
      if (r[i][j] && r[j][i]) {
        out.cell_of[j] = id;
        out.cells.back().push_back(j);
      }
    }
  }
  const std::size_t count = out.cells.size();
  out.leq.assign(count, std::vector<bool>(count, false));
  for (std::size_t a = 0; a < count; ++a) {
    for (std::size_t b = 0; b < count; ++b) {
      out.leq[a][b] = r[out.cells[a].front()][out.cells[b].front()];
    }
  }
  return out;
}

}  // namespace

CellPartition compute_cells(const StructureTensor& c) {
  const int size = c.size();
  Relation left(size, std::vector<bool>(size, false));
  Relation right = left;
  for (int x = 0; x < size; ++x) {
    for (int y = 0; y < size; ++y) {
      for (int z = 0; z < size; ++z) {
        if (c(x, y, z) <= 0) continue;
        left[y][z] = true;
        right[x][z] = true;
      }
    }
  }
  Relation both = left;
  for (int i = 0; i < size; ++i) {
    for (int j = 0; j < size; ++j) {
      if (right[i][j]) both[i][j] = true;
    }
  }
  return {cells_from_preorder(std::move(left)), cells_from_preorder(std::move(right)),
          cells_from_preorder(std::move(both))};
}

}  // namespace klc
