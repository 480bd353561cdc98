#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "klc/algnum.hpp"
#include "klc/basedring.hpp"
#include "klc/matrix_module.hpp"

namespace klc {

/// One ring homomorphism to the reals, indexed by basis label. `values` is
/// filled only for exact rows; `approx` always is.
struct CharacterRow {
  std::vector<QuadNum> values;
  std::vector<double> approx;
  bool exact = true;
};

struct CharacterTable {
  BasedRing ring;
  std::vector<CharacterRow> rows;

  bool exact() const;
  /// Row vanishing on every non-identity basis element, or -1.
  int trivial_row() const;
};

struct ModuleDecomposition {
  std::vector<std::int64_t> multiplicities;
  friend bool operator==(const ModuleDecomposition&, const ModuleDecomposition&) = default;
};

/// All characters of a commutative split semisimple based ring, sorted by
/// their values in label order. Throws std::domain_error for non-commutative
/// rings and for spectra that are not real and simple.
CharacterTable character_table(const BasedRing& ring);

/// chi(x) chi(y) = sum_z c[x,y,z] chi(z) for all x, y, checked exactly.
bool is_multiplicative(const BasedRing& ring, const std::vector<QuadNum>& values);

/// Multiplicities m with sum_i m_i chi_i(b) = traces[b]. Throws
/// std::domain_error unless m is a non-negative integer vector.
ModuleDecomposition decompose_traces(const CharacterTable& table,
                                     std::span<const std::int64_t> traces);
ModuleDecomposition decompose(const CharacterTable& table, const MatrixModule& module);

/// sum_i m_i chi_i(b) for every label b, exactly. Requires an exact table.
std::vector<QuadNum> profile_traces(const CharacterTable& table,
                                    std::span<const std::int64_t> multiplicities);

/// Row with the unique largest |chi(sum of basis)|. Throws std::domain_error
/// on a tie.
int special_character(const CharacterTable& table);

}  // namespace klc
