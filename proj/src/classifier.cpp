#include "klc/classifier.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numeric>
#include <stdexcept>

#include "klc/annotations.hpp"

namespace klc {

// ---------------------------------------------------------------------------
// Rank profiles

std::vector<std::vector<std::int64_t>> feasible_rank_profiles(const CharacterTable& table,
                                                              const ProfileOptions& options) {
  const int rows = static_cast<int>(table.rows.size());
  std::vector<std::vector<std::int64_t>> out;
  if (!options.faithful) {
    const int trivial = table.trivial_row();
    if (trivial < 0) return out;
    for (int k = 1; k <= options.max_rank; ++k) {
      std::vector<std::int64_t> m(rows, 0);
      m[trivial] = k;
      out.push_back(std::move(m));
    }
    return out;
  }
  if (!table.exact()) {
    throw std::domain_error("feasible_rank_profiles: needs an exact character table");
  }
  const int special = special_character(table);
  const int trivial = table.trivial_row();
  const int s = table.ring.find("s");
  std::vector<std::int64_t> m(rows, 0);
  m[special] = 1;
  auto accept = [&] {
    bool beyond_trivial = false;
    std::int64_t rank = 0;
    for (int i = 0; i < rows; ++i) {
      rank += m[i];
      if (m[i] > 0 && i != trivial) beyond_trivial = true;
    }
    if (!beyond_trivial) return false;
    const auto traces = profile_traces(table, m);
    for (const auto& t : traces) {
      if (!t.is_integer() || t.sign() < 0) return false;
    }
    if (options.s_rigid && s >= 0 && traces[s] != QuadNum(2 * rank)) return false;
    return true;
  };
  // Enumerate the other multiplicities with total rank <= max_rank.
  auto recurse = [&](auto&& self, int row, int budget) -> void {
    if (row == rows) {
      if (accept()) out.push_back(m);
      return;
    }
    if (row == special) return self(self, row + 1, budget);
    for (int k = 0; k <= budget; ++k) {
      m[row] = k;
      self(self, row + 1, budget - k);
    }
    m[row] = 0;
  };
  if (options.max_rank >= 1) recurse(recurse, 0, options.max_rank - 1);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<std::int64_t>> feasible_rank_profiles(const CharacterTable& table,
                                                              bool faithful) {
  ProfileOptions options;
  options.faithful = faithful;
  return feasible_rank_profiles(table, options);
}

// ---------------------------------------------------------------------------
// Filters

namespace {

bool is_s_rigid(const FilterContext& ctx, const MatrixModule& module) {
  const int s = ctx.ring.find("s");
  if (s < 0) return true;
  const IntMatrix& ms = module.matrices[s];
  return ms.isZero() || ms == 2 * IntMatrix::Identity(module.rank, module.rank);
}

bool has_special_multiplicity_one(const FilterContext& ctx, const MatrixModule& module) {
  if (ctx.table == nullptr) {
    throw std::invalid_argument("filter special-mult-one needs a character table");
  }
  try {
    const auto d = decompose(*ctx.table, module);
    return d.multiplicities[special_character(*ctx.table)] == 1;
  } catch (const std::domain_error&) {
    return false;
  }
}

}  // namespace

const std::vector<NamedFilter>& named_filters() {
  static const std::vector<NamedFilter> filters{
      {"transitive", "sum of all basis matrices is entrywise positive", true,
       [](const FilterContext&, const MatrixModule& m) { return is_transitive(m); }},
      {"faithful", "some non-identity basis matrix is non-zero", false,
       [](const FilterContext& ctx, const MatrixModule& m) { return is_faithful(ctx.ring, m); }},
      {"s-rigidity", "M_s is zero or twice the identity",
       false, is_s_rigid},
      {"special-mult-one", "the special character occurs exactly once", false,
       has_special_multiplicity_one},
  };
  return filters;
}

const NamedFilter& find_filter(const std::string& name) {
  for (const auto& f : named_filters()) {
    if (f.name == name) return f;
  }
  throw std::invalid_argument("unknown filter '" + name + "'");
}

std::vector<std::string> failed_filters(const FilterContext& ctx, const MatrixModule& module,
                                        const std::set<std::string>& filters) {
  std::vector<std::string> out;
  for (const auto& f : named_filters()) {
    if ((f.always_on || filters.count(f.name)) && !f.accepts(ctx, module)) out.push_back(f.name);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Search

namespace {

struct Term {
  std::int64_t coef = 1;
  int u = -1;
  int v = -1;
};

struct Equation {
  std::vector<Term> lhs;
  std::vector<Term> rhs;
  std::int64_t lhs_const = 0;
  std::int64_t rhs_const = 0;
};

struct Domain {
  std::vector<std::int64_t> lo;
  std::vector<std::int64_t> hi;
};

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  return (a % b != 0 && ((a < 0) != (b < 0))) ? q - 1 : q;
}

std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return -floor_div(-a, b); }

std::int64_t floor_sqrt(std::int64_t x) {
  if (x < 0) return -1;
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(x)));
  while (r * r > x) --r;
  while ((r + 1) * (r + 1) <= x) ++r;
  return r;
}

std::int64_t ceil_sqrt(std::int64_t x) {
  if (x <= 0) return 0;
  std::int64_t r = floor_sqrt(x);
  return r * r == x ? r : r + 1;
}

// Entries of the non-identity basis matrices as integer variables, the ring
// relations and optional trace conditions as equations between sums of
// non-negative terms, and interval propagation over them.
class ModuleSearch {
 public:
  ModuleSearch(const BasedRing& ring, int rank, const SearchOptions& options, std::int64_t bound)
      : ring_(ring), rank_(rank), options_(options), bound_(bound), ctx_{ring, options.table} {
    int next = 0;
    slot_.assign(ring.size(), -1);
    for (int b = 0; b < ring.size(); ++b) {
      if (b != ring.identity_index) slot_[b] = next++;
    }
    var_count_ = next * rank * rank;
    build_equations();
  }

  SearchResult run() {
    SearchResult result;
    result.bound = bound_;
    Domain root{std::vector<std::int64_t>(var_count_, 0),
                std::vector<std::int64_t>(var_count_, bound_)};
    if (options_.traces && (*options_.traces)[ring_.identity_index] != rank_) return result;
    const int s = ring_.find("s");
    std::vector<int> all(equations_.size());
    std::iota(all.begin(), all.end(), 0);
    if (options_.filters.count("s-rigidity") && s >= 0 && s != ring_.identity_index) {
      // M_s is 0 or 2I
      for (std::int64_t scale : {0, 2}) {
        Domain fixed = root;
        for (int i = 0; i < rank_; ++i)
          for (int j = 0; j < rank_; ++j) {
            const int v = var(s, i, j);
            fixed.lo[v] = fixed.hi[v] = (i == j ? scale : 0);
          }
        if (propagate(fixed, all)) dfs(fixed, result);
      }
    } else if (propagate(root, all)) {
      dfs(root, result);
    }
    result.modules.assign(found_.begin(), found_.end());
    return result;
  }

 private:
  int var(int label, int i, int j) const { return (slot_[label] * rank_ + i) * rank_ + j; }

  void add_entry(std::vector<Term>& terms, std::int64_t& constant, std::int64_t coef, int label,
                 int i, int j) {
    if (label == ring_.identity_index) {
      constant += i == j ? coef : 0;
    } else {
      terms.push_back({coef, var(label, i, j), -1});
    }
  }

  void build_equations() {
    const int size = ring_.size();
    const int e = ring_.identity_index;
    for (int x = 0; x < size; ++x) {
      for (int y = 0; y < size; ++y) {
        if (x == e || y == e) continue;
        for (int i = 0; i < rank_; ++i) {
          for (int j = 0; j < rank_; ++j) {
            Equation eq;
            for (int k = 0; k < rank_; ++k) eq.lhs.push_back({1, var(x, i, k), var(y, k, j)});
            for (int z = 0; z < size; ++z) {
              if (ring_.c(x, y, z) > 0) add_entry(eq.rhs, eq.rhs_const, ring_.c(x, y, z), z, i, j);
            }
            equations_.push_back(std::move(eq));
          }
        }
      }
    }
    if (options_.traces) {
      for (int b = 0; b < size; ++b) {
        if (b == e) continue;
        Equation eq;
        for (int i = 0; i < rank_; ++i) eq.lhs.push_back({1, var(b, i, i), -1});
        eq.rhs_const = (*options_.traces)[b];
        equations_.push_back(std::move(eq));
      }
    }
    touching_.assign(var_count_, {});
    for (int k = 0; k < static_cast<int>(equations_.size()); ++k) {
      for (const auto* side : {&equations_[k].lhs, &equations_[k].rhs}) {
        for (const auto& t : *side) {
          for (int v : {t.u, t.v}) {
            if (v >= 0 && (touching_[v].empty() || touching_[v].back() != k)) {
              touching_[v].push_back(k);
            }
          }
        }
      }
    }
  }

  static std::int64_t term_lo(const Domain& d, const Term& t) {
    return t.coef * d.lo[t.u] * (t.v < 0 ? 1 : d.lo[t.v]);
  }
  static std::int64_t term_hi(const Domain& d, const Term& t) {
    return t.coef * d.hi[t.u] * (t.v < 0 ? 1 : d.hi[t.v]);
  }

  // Shrinks domain of `v` to [lo, hi]; records changes. False on wipe-out.
  static bool narrow(Domain& d, int v, std::int64_t lo, std::int64_t hi, std::vector<int>& changed) {
    bool moved = false;
    if (lo > d.lo[v]) {
      d.lo[v] = lo;
      moved = true;
    }
    if (hi < d.hi[v]) {
      d.hi[v] = hi;
      moved = true;
    }
    if (moved) changed.push_back(v);
    return d.lo[v] <= d.hi[v];
  }

  // Restricts term t to values in [lo, hi].
  static bool narrow_term(Domain& d, const Term& t, std::int64_t lo, std::int64_t hi,
                          std::vector<int>& changed) {
    if (hi < 0) return false;
    lo = std::max<std::int64_t>(lo, 0);
    const std::int64_t qlo = ceil_div(lo, t.coef);
    const std::int64_t qhi = floor_div(hi, t.coef);
    if (t.v < 0) return narrow(d, t.u, qlo, qhi, changed);
    if (t.u == t.v) return narrow(d, t.u, ceil_sqrt(qlo), floor_sqrt(qhi), changed);
    for (auto [a, b] : {std::pair{t.u, t.v}, std::pair{t.v, t.u}}) {
      std::int64_t new_lo = d.lo[a];
      std::int64_t new_hi = d.hi[a];
      if (d.lo[b] > 0) new_hi = std::min(new_hi, qhi / d.lo[b]);
      if (d.hi[b] > 0) {
        new_lo = std::max(new_lo, ceil_div(qlo, d.hi[b]));
      } else if (qlo > 0) {
        return false;
      }
      if (!narrow(d, a, new_lo, new_hi, changed)) return false;
    }
    return true;
  }

  bool propagate_equation(Domain& d, const Equation& eq, std::vector<int>& changed) const {
    std::int64_t llo = eq.lhs_const, lhi = eq.lhs_const;
    std::int64_t rlo = eq.rhs_const, rhi = eq.rhs_const;
    for (const auto& t : eq.lhs) {
      llo += term_lo(d, t);
      lhi += term_hi(d, t);
    }
    for (const auto& t : eq.rhs) {
      rlo += term_lo(d, t);
      rhi += term_hi(d, t);
    }
    if (llo > rhi || rlo > lhi) return false;
    for (const auto& t : eq.lhs) {
      const std::int64_t tlo = term_lo(d, t), thi = term_hi(d, t);
      if (!narrow_term(d, t, rlo - (lhi - thi), rhi - (llo - tlo), changed)) return false;
    }
    for (const auto& t : eq.rhs) {
      const std::int64_t tlo = term_lo(d, t), thi = term_hi(d, t);
      if (!narrow_term(d, t, llo - (rhi - thi), lhi - (rlo - tlo), changed)) return false;
    }
    return true;
  }

  bool transitivity_possible(const Domain& d) const {
    for (int i = 0; i < rank_; ++i) {
      for (int j = 0; j < rank_; ++j) {
        if (i == j) continue;
        bool possible = false;
        for (int b = 0; b < ring_.size() && !possible; ++b) {
          if (b != ring_.identity_index && d.hi[var(b, i, j)] > 0) possible = true;
        }
        if (!possible) return false;
      }
    }
    return true;
  }

  bool propagate(Domain& d, const std::vector<int>& initial) const {
    std::deque<int> queue(initial.begin(), initial.end());
    std::vector<bool> queued(equations_.size(), false);
    for (int k : initial) queued[k] = true;
    std::vector<int> changed;
    while (!queue.empty()) {
      const int k = queue.front();
      queue.pop_front();
      queued[k] = false;
      changed.clear();
      if (!propagate_equation(d, equations_[k], changed)) return false;
      for (int v : changed) {
        for (int other : touching_[v]) {
          if (!queued[other]) {
            queued[other] = true;
            queue.push_back(other);
          }
        }
      }
    }
    return transitivity_possible(d);
  }

  void dfs(const Domain& d, SearchResult& result) {
    ++result.nodes;
    int pick = -1;
    for (int v = 0; v < var_count_; ++v) {
      if (d.lo[v] == d.hi[v]) continue;
      if (pick < 0 || d.hi[v] - d.lo[v] < d.hi[pick] - d.lo[pick]) pick = v;
    }
    if (pick < 0) {
      leaf(d, result);
      return;
    }
    for (std::int64_t value = d.lo[pick]; value <= d.hi[pick]; ++value) {
      Domain child = d;
      child.lo[pick] = child.hi[pick] = value;
      if (!propagate(child, touching_[pick])) continue;
      if (value == bound_) result.bound_exhausted = true;
      dfs(child, result);
    }
  }

  void leaf(const Domain& d, SearchResult& result) {
    MatrixModule module = zero_module(ring_, rank_);
    for (int b = 0; b < ring_.size(); ++b) {
      if (b == ring_.identity_index) continue;
      for (int i = 0; i < rank_; ++i)
        for (int j = 0; j < rank_; ++j) module.matrices[b](i, j) = d.lo[var(b, i, j)];
    }
    if (std::any_of(d.lo.begin(), d.lo.end(), [&](auto v) { return v == bound_; })) {
      result.bound_exhausted = true;
    }
    if (!satisfies_relations(ring_, module)) {
      throw std::logic_error("solve_matrix_modules: propagation accepted a non-solution");
    }
    if (options_.traces && module.traces() != *options_.traces) {
      throw std::logic_error("solve_matrix_modules: propagation ignored a trace condition");
    }
    if (!failed_filters(ctx_, module, options_.filters).empty()) return;
    found_.insert(canonical(module));
  }

  const BasedRing& ring_;
  int rank_;
  const SearchOptions& options_;
  std::int64_t bound_;
  FilterContext ctx_;
  std::vector<int> slot_;
  int var_count_ = 0;
  std::vector<Equation> equations_;
  std::vector<std::vector<int>> touching_;
  std::set<MatrixModule> found_;
};

}  // namespace

std::int64_t default_entry_bound(const BasedRing& ring, int rank,
                                 const std::optional<std::vector<std::int64_t>>& traces) {
  std::int64_t budget = 0;
  if (traces) {
    for (auto t : *traces) budget = std::max(budget, t);
  }
  const std::int64_t base = std::max(budget, ring.c.max_entry() * rank);
  return base * base;
}

SearchResult solve_matrix_modules(const BasedRing& ring, int rank, const SearchOptions& options) {
  if (rank < 1) throw std::invalid_argument("solve_matrix_modules: rank must be positive");
  for (const auto& name : options.filters) find_filter(name);
  if (options.traces && static_cast<int>(options.traces->size()) != ring.size()) {
    throw std::invalid_argument("solve_matrix_modules: one trace per basis element required");
  }
  const std::int64_t bound = options.bound.value_or(default_entry_bound(ring, rank, options.traces));
  if (bound < 0) throw std::invalid_argument("solve_matrix_modules: bound must be non-negative");
  return ModuleSearch(ring, rank, options, bound).run();
}

// ---------------------------------------------------------------------------
// Classification

std::string to_string(Status status) {
  switch (status) {
    case Status::RealizedCell:
      return "realized-cell";
    case Status::RealizedExtra:
      return "realized-extra";
    case Status::Excluded:
      return "excluded";
    case Status::Unresolved:
      break;
  }
  return "unresolved";
}

Status status_from_string(const std::string& text) {
  for (auto s : {Status::RealizedCell, Status::RealizedExtra, Status::Excluded, Status::Unresolved}) {
    if (to_string(s) == text) return s;
  }
  throw std::invalid_argument("unknown status '" + text + "'");
}

int ClassificationReport::realized_count() const {
  return static_cast<int>(std::count_if(candidates.begin(), candidates.end(), [](const auto& c) {
    return c.status == Status::RealizedCell || c.status == Status::RealizedExtra;
  }));
}

BasedRing ring_for_id(const std::string& ring_id) {
  if (ring_id.size() >= 2 && (ring_id[0] == 'Q' || ring_id[0] == 'A')) {
    int n = 0;
    try {
      std::size_t used = 0;
      n = std::stoi(ring_id.substr(1), &used);
      if (used != ring_id.size() - 1) n = 0;
    } catch (const std::exception&) {
      n = 0;
    }
    if (n >= 3) return ring_id[0] == 'Q' ? subquotient_qn(n) : subring_an(n);
  }
  throw std::invalid_argument("unknown ring id '" + ring_id + "'");
}

ClassificationReport classify(const std::string& ring_id, const ClassifyOptions& options) {
  return classify(ring_id, ring_for_id(ring_id), options);
}

ClassificationReport classify(const std::string& ring_id, const BasedRing& ring,
                              const ClassifyOptions& options) {
  for (const auto& name : options.filters) find_filter(name);
  ClassificationReport report;
  report.ring_id = ring_id;
  report.ring = ring;
  report.table = character_table(ring);
  report.filters = options.filters;
  const auto& table = report.table;
  const auto& annotations = options.annotations ? *options.annotations : bundled_annotations();
  const bool annotated = has_annotations(annotations, ring_id);
  auto wanted = [&](std::int64_t rank) { return !options.rank || *options.rank == rank; };

  ProfileOptions nonfaithful{false, false, options.max_rank};
  for (const auto& profile : feasible_rank_profiles(table, nonfaithful)) {
    const auto rank = std::accumulate(profile.begin(), profile.end(), std::int64_t{0});
    if (!wanted(rank)) continue;
    MatrixModule module = zero_module(ring, static_cast<int>(rank));
    if (!is_transitive(module)) continue;
    report.candidates.push_back({module, decompose(table, module), false, Status::Unresolved, {}});
  }

  ProfileOptions faithful{true, options.filters.count("s-rigidity") > 0, options.max_rank};
  for (const auto& profile : feasible_rank_profiles(table, faithful)) {
    const auto rank = std::accumulate(profile.begin(), profile.end(), std::int64_t{0});
    if (!wanted(rank)) continue;
    std::vector<std::int64_t> traces;
    for (const auto& t : profile_traces(table, profile)) {
      if (!t.is_integer()) throw std::logic_error("classify: profile with non-integral trace");
      traces.push_back(t.rational_part().convert_to<std::int64_t>());
    }
    SearchOptions search{options.filters, options.bound, traces, &table};
    auto result = solve_matrix_modules(ring, static_cast<int>(rank), search);
    report.bound = std::max(report.bound, result.bound);
    report.bound_exhausted = report.bound_exhausted || result.bound_exhausted;
    for (auto& module : result.modules) {
      auto decomposition = decompose(table, module);
      report.candidates.push_back(
          {std::move(module), std::move(decomposition), true, Status::Unresolved, {}});
    }
  }
  std::sort(report.candidates.begin(), report.candidates.end(),
            [](const Candidate& a, const Candidate& b) { return a.module < b.module; });

  const ClassifyOptions defaults;
  const FilterContext ctx{ring, &table};
  for (auto& candidate : report.candidates) {
    auto match = std::find_if(annotations.begin(), annotations.end(), [&](const Annotation& a) {
      return a.ring_id == ring_id && a.module == candidate.module;
    });
    if (match != annotations.end()) {
      candidate.status = match->status;
      candidate.citation = match->citation;
      continue;
    }
    const auto failed = failed_filters(ctx, candidate.module, defaults.filters);
    std::string reason;
    for (const auto& f : failed) reason += (reason.empty() ? "fails " : ", ") + f;
    if (!annotated) {
      candidate.status = Status::Unresolved;
      candidate.citation = reason.empty() ? "no annotation data for " + ring_id : reason;
    } else if (!failed.empty()) {
      candidate.status = Status::Excluded;
      candidate.citation = reason;
    } else {
      candidate.status = Status::Unresolved;
      candidate.citation = "not in the annotation data";
      report.mismatches.push_back("computed rank-" + std::to_string(candidate.module.rank) +
                                  " candidate is not annotated");
    }
  }
  for (const auto& a : annotations) {
    if (a.ring_id != ring_id || !wanted(a.module.rank) || a.module.rank > options.max_rank) {
      continue;
    }
    const bool present = std::any_of(report.candidates.begin(), report.candidates.end(),
                                     [&](const Candidate& c) { return c.module == a.module; });
    if (!present) {
      report.mismatches.push_back("annotated rank-" + std::to_string(a.module.rank) + " " +
                                  to_string(a.status) + " candidate was not computed");
    }
  }
  return report;
}

}  // namespace klc
