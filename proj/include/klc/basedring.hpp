#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "klc/structure.hpp"

namespace klc {

/// Ring with a distinguished basis, identity basis element and non-negative
/// integral structure constants, plus an anti-involution on the labels.
struct BasedRing {
  std::vector<std::string> labels;
  int identity_index = 0;
  StructureTensor c;
  std::vector<int> involution;

  int size() const { return static_cast<int>(labels.size()); }
  int index_of(const std::string& label) const;
  /// -1 when absent.
  int find(const std::string& label) const;
  bool is_commutative() const;

  friend bool operator==(const BasedRing&, const BasedRing&) = default;
};

struct Violation {
  std::string axiom;
  std::vector<int> witness;
  std::string detail;
};

struct VerificationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
  std::string summary() const;
};

/// Re-checks every based-ring axiom and reports each failure with a witness.
VerificationReport verify(const BasedRing& ring);

/// Builds a ring and throws std::invalid_argument unless `verify` passes.
BasedRing make_based_ring(std::vector<std::string> labels, int identity_index, StructureTensor c,
                          std::vector<int> involution = {});

/// Span of e and the s-s words other than w0 in the Kazhdan-Lusztig ring of
/// D_{2n}, with the w0 coefficient of every product deleted.
BasedRing subquotient_qn(int n);

/// The subring spanned by e and s.
BasedRing subring_an(int n);

/// The full Kazhdan-Lusztig ring of D_{2n} as a based ring.
BasedRing full_kl_ring(int n);

/// Restriction of `ring` to the span of `labels` (which must contain the
/// identity and be closed under products).
BasedRing based_subring(const BasedRing& ring, const std::vector<std::string>& labels);

CellPartition cells_of(const BasedRing& ring);

/// File format: {"labels": [...], "identity": i, "involution": [...],
/// "constants": [[x, y, z, c], ...]} with only c > 0 listed, sorted.
nlohmann::json ring_to_json(const BasedRing& ring);
BasedRing ring_from_json(const nlohmann::json& j);
BasedRing load_ring_file(const std::string& path);

}  // namespace klc
