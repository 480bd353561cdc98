#pragma once

#include <string>
#include <vector>

#include "klc/basedring.hpp"
#include "klc/types.hpp"

namespace klc {

/// Candidate based module: one rank x rank non-negative integer matrix per
/// basis label, in the ring's label order, with the identity acting as I.
///
/// Entry (i, j) of the matrix for F counts how often the i-th indecomposable
/// occurs in F applied to the j-th. The matrix of F on simples is the
/// transpose of this one for the adjoint of F; the rings here have a trivial
/// involution on labels, so that data adds no constraint.
struct MatrixModule {
  int rank = 0;
  std::vector<IntMatrix> matrices;

  const IntMatrix& operator[](int label) const { return matrices[label]; }
  IntMatrix sum() const;
  std::vector<std::int64_t> traces() const;
  /// Entries in label order, row-major; the order used for canonical forms.
  std::vector<std::int64_t> flatten() const;

  friend bool operator==(const MatrixModule& a, const MatrixModule& b);
  friend bool operator<(const MatrixModule& a, const MatrixModule& b);
};

/// rank x rank zero matrices for every label except the identity.
MatrixModule zero_module(const BasedRing& ring, int rank);

/// M_x M_y = sum_z c[x,y,z] M_z for all x, y, checked by full multiplication.
bool satisfies_relations(const BasedRing& ring, const MatrixModule& module);

/// Sum of all basis matrices is entrywise positive.
bool is_transitive(const MatrixModule& module);

/// Some non-identity basis matrix is non-zero.
bool is_faithful(const BasedRing& ring, const MatrixModule& module);

/// Simultaneous conjugation by a permutation: entry (i, j) moves to
/// (perm[i], perm[j]).
MatrixModule permute(const MatrixModule& module, const std::vector<int>& perm);

/// Lexicographically smallest `flatten()` over all rank! relabelings.
MatrixModule canonical(const MatrixModule& module);

std::string format_matrix(const IntMatrix& m);

}  // namespace klc
