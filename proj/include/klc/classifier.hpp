#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "klc/basedring.hpp"
#include "klc/characters.hpp"
#include "klc/matrix_module.hpp"

namespace klc {

/// Multiplicity vectors (one entry per character row) that can be the
/// character of a transitive module.
///
/// Non-faithful modules factor through the quotient by all non-identity
/// basis elements, so their profiles are multiples of the trivial character.
/// Faithful profiles contain the special character exactly once, give every
/// basis element a non-negative integral trace and, with `s_rigid`, only use
/// characters with chi(s) = 2 (the action of s is twice the identity).
struct ProfileOptions {
  bool faithful = true;
  bool s_rigid = true;
  int max_rank = 6;
};

std::vector<std::vector<std::int64_t>> feasible_rank_profiles(const CharacterTable& table,
                                                              const ProfileOptions& options);
std::vector<std::vector<std::int64_t>> feasible_rank_profiles(const CharacterTable& table,
                                                              bool faithful);

struct FilterContext {
  const BasedRing& ring;
  const CharacterTable* table = nullptr;
};

struct NamedFilter {
  std::string name;
  std::string description;
  bool always_on = false;
  std::function<bool(const FilterContext&, const MatrixModule&)> accepts;
};

/// Registered filters: transitive (always on), faithful, s-rigidity,
/// special-mult-one.
const std::vector<NamedFilter>& named_filters();
const NamedFilter& find_filter(const std::string& name);

/// Names of the filters in `filters` (plus the always-on ones) that reject
/// `module`.
std::vector<std::string> failed_filters(const FilterContext& ctx, const MatrixModule& module,
                                        const std::set<std::string>& filters);

struct SearchOptions {
  std::set<std::string> filters;
  /// Hard per-entry bound; defaults to `default_entry_bound`.
  std::optional<std::int64_t> bound;
  /// Exact trace of every basis matrix, in label order.
  std::optional<std::vector<std::int64_t>> traces;
  /// Needed by special-mult-one.
  const CharacterTable* table = nullptr;
};

struct SearchResult {
  /// Canonical forms, sorted, without duplicates.
  std::vector<MatrixModule> modules;
  std::int64_t bound = 0;
  /// Some consistent branch put an entry at the hard bound, so solutions
  /// with larger entries may have been cut off.
  bool bound_exhausted = false;
  std::uint64_t nodes = 0;
};

/// max(trace budget, largest structure constant * rank)^2.
std::int64_t default_entry_bound(const BasedRing& ring, int rank,
                                 const std::optional<std::vector<std::int64_t>>& traces);

/// Every transitive matrix module of the given rank with entries up to the
/// bound that passes the requested filters, up to simultaneous permutation.
SearchResult solve_matrix_modules(const BasedRing& ring, int rank, const SearchOptions& options);

enum class Status { RealizedCell, RealizedExtra, Excluded, Unresolved };

std::string to_string(Status status);
Status status_from_string(const std::string& text);

struct Candidate {
  MatrixModule module;
  ModuleDecomposition decomposition;
  bool faithful = false;
  Status status = Status::Unresolved;
  std::string citation;
};

struct Annotation;

struct ClassifyOptions {
  std::set<std::string> filters{"transitive", "faithful", "s-rigidity", "special-mult-one"};
  std::optional<std::int64_t> bound;
  /// Restrict to one rank.
  std::optional<int> rank;
  int max_rank = 6;
  /// Defaults to `bundled_annotations()`.
  const std::vector<Annotation>* annotations = nullptr;
};

struct ClassificationReport {
  std::string ring_id;
  BasedRing ring;
  CharacterTable table;
  std::vector<Candidate> candidates;
  std::set<std::string> filters;
  std::int64_t bound = 0;
  bool bound_exhausted = false;
  /// Disagreements between computed candidates and the annotation data.
  std::vector<std::string> mismatches;

  int realized_count() const;
};

/// "Q3".."Q6" (or any "Q<n>") and "A<n>" name bundled rings.
BasedRing ring_for_id(const std::string& ring_id);

/// Profiles, then the search per profile, then annotation. Rings without
/// annotation data get status Unresolved throughout.
ClassificationReport classify(const std::string& ring_id, const ClassifyOptions& options);
ClassificationReport classify(const std::string& ring_id, const BasedRing& ring,
                              const ClassifyOptions& options);

}  // namespace klc
