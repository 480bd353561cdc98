#pragma once

#include <memory>
#include <string>
#include <vector>

#include "klc/dihedral.hpp"
#include "klc/structure.hpp"
#include "klc/types.hpp"

namespace klc {

/// Element of the integral group ring ZD_{2n}, stored densely over
/// `enumerate_elements(params)`.
class GroupAlgebraElement {
 public:
  explicit GroupAlgebraElement(const GroupParams& params);
  GroupAlgebraElement(const GroupParams& params, const DihedralElement& el);

  const GroupParams& params() const { return params_; }
  const std::vector<BigInt>& coeffs() const { return coeffs_; }

  const BigInt& coeff(int index) const { return coeffs_[index]; }
  const BigInt& operator[](const DihedralElement& el) const;
  BigInt& operator[](const DihedralElement& el);

  GroupAlgebraElement& operator+=(const GroupAlgebraElement& other);
  GroupAlgebraElement& operator-=(const GroupAlgebraElement& other);
  friend GroupAlgebraElement operator*(const GroupAlgebraElement& x, const GroupAlgebraElement& y);
  friend GroupAlgebraElement operator*(const BigInt& k, GroupAlgebraElement x);
  friend bool operator==(const GroupAlgebraElement&, const GroupAlgebraElement&) = default;

 private:
  GroupParams params_;
  std::vector<BigInt> coeffs_;
};

/// Kazhdan-Lusztig basis element: the sum of all v below w in Bruhat order.
GroupAlgebraElement kl_basis_element(const GroupParams& params, const DihedralElement& w);

/// Coordinates of `x` in the Kazhdan-Lusztig basis, indexed like
/// `enumerate_elements`. The change of basis is unitriangular, so this is
/// exact back-substitution from the longest element down.
std::vector<BigInt> to_kl_coords(const GroupParams& params, const GroupAlgebraElement& x);

struct KLStructureConstants {
  GroupParams params;
  std::vector<DihedralElement> elements;
  std::vector<std::string> labels;
  StructureTensor c;

  int index_of(const std::string& label) const;
};

/// Structure constants of ZD_{2n} in the Kazhdan-Lusztig basis. Throws
/// std::logic_error if any coefficient is negative.
KLStructureConstants structure_constants(const GroupParams& params);

/// Memoized `structure_constants`; safe to call from several threads.
std::shared_ptr<const KLStructureConstants> cached_structure_constants(int n);

/// Left, right and two-sided cells. z is above y in the left preorder when z
/// occurs in some x * y, above x in the right preorder when it occurs in some
/// x * y; the two-sided preorder is generated by both.
CellPartition compute_cells(const StructureTensor& c);

}  // namespace klc
