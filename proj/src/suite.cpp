#include "klc/suite.hpp"

#include <algorithm>
#include <exception>
#include <functional>
#include <set>
#include <sstream>

#include "klc/characters.hpp"
#include "klc/klring.hpp"

namespace klc {

namespace {

using Check = std::function<std::string()>;

std::string check_group(int n) {
  const GroupParams params(n);
  const auto elements = enumerate_elements(params);
  if (static_cast<int>(elements.size()) != 2 * n) return "wrong element count";
  for (const auto& u : elements) {
    if (!(multiply(params, u, inverse(params, u)) == DihedralElement::identity())) {
      return "u * u^-1 != e for " + u.label();
    }
    for (const auto& v : elements)
      for (const auto& w : elements)
        if (!(multiply(params, multiply(params, u, v), w) ==
              multiply(params, u, multiply(params, v, w))))
          return "associativity fails at " + u.label() + "," + v.label() + "," + w.label();
  }
  for (const auto& v : elements) {
    const auto interval = subword_products(params, v.reduced_word());
    for (std::size_t i = 0; i < elements.size(); ++i) {
      if (bruhat_leq(params, elements[i], v) != interval[i]) {
        return "Bruhat order disagrees with subwords at " + elements[i].label() + " <= " +
               v.label();
      }
    }
  }
  return {};
}

std::string check_kl_ring(int n) {
  const BasedRing ring = full_kl_ring(n);
  if (auto r = verify(ring); !r.ok()) return r.summary();
  return check_dihedral_cells(n);
}

std::string check_qn(int n) {
  const BasedRing q = subquotient_qn(n);
  if (auto r = verify(q); !r.ok()) return r.summary();
  if (q.size() != 1 + n / 2) return "basis size " + std::to_string(q.size());
  if (n == 3 && !(q == subring_an(3))) return "Q_3 differs from A_3";
  if (!(subring_an(n) == subring_an(3))) return "A_n depends on n";
  const auto cells = cells_of(q);
  if (cells.two_sided.cells.size() != 2 || !cells.two_sided.less_equal(0, 1)) {
    return "Q_n should have two two-sided cells {e} < J";
  }
  const auto table = character_table(q);
  for (const auto& row : table.rows) {
    if (row.exact && !is_multiplicative(q, row.values)) return "character not multiplicative";
  }
  return {};
}

std::string check_classification(const std::string& id, int realized,
                                 const std::vector<Annotation>& annotations) {
  ClassifyOptions options;
  options.annotations = &annotations;
  const auto report = classify(id, options);
  if (!report.mismatches.empty()) return report.mismatches.front();
  if (report.realized_count() != realized) {
    return std::to_string(report.realized_count()) + " realized classes, expected " +
           std::to_string(realized);
  }
  return {};
}

}  // namespace

bool SuiteReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed; });
}

std::string SuiteReport::render() const {
  std::ostringstream out;
  for (const auto& c : checks) {
    out << (c.passed ? "PASS " : "FAIL ") << c.name;
    if (!c.detail.empty()) out << ": " << c.detail;
    out << "\n";
  }
  const auto passed = std::count_if(checks.begin(), checks.end(), [](auto& c) { return c.passed; });
  out << passed << "/" << checks.size() << " checks passed\n";
  return out.str();
}

std::string check_dihedral_cells(int n) {
  const GroupParams params(n);
  const auto kl = cached_structure_constants(n);
  const auto cells = compute_cells(kl->c);
  const int w0 = params.order() - 1;

  auto expected = [&](bool left) {
    std::set<std::set<int>> out{{0}, {w0}};
    std::set<int> s_cell, t_cell;
    for (int i = 1; i < w0; ++i) {
      const auto d = left ? right_descents(params, kl->elements[i])
                          : left_descents(params, kl->elements[i]);
      (d.s ? s_cell : t_cell).insert(i);
    }
    out.insert(s_cell);
    out.insert(t_cell);
    return out;
  };
  auto as_sets = [](const CellOrder& order) {
    std::set<std::set<int>> out;
    for (const auto& c : order.cells) out.insert(std::set<int>(c.begin(), c.end()));
    return out;
  };
  auto shape_ok = [&](const CellOrder& order) {
    const int e_cell = order.cell_of[0];
    const int top = order.cell_of[w0];
    for (int a = 0; a < static_cast<int>(order.cells.size()); ++a) {
      if (!order.less_equal(e_cell, a) || !order.less_equal(a, top)) return false;
      for (int b = 0; b < static_cast<int>(order.cells.size()); ++b) {
        const bool middle = a != e_cell && a != top && b != e_cell && b != top;
        if (middle && a != b && order.comparable(a, b)) return false;
      }
    }
    return true;
  };
  if (as_sets(cells.left) != expected(true)) return "left cells differ from descent classes";
  if (as_sets(cells.right) != expected(false)) return "right cells differ from descent classes";
  std::set<int> middle;
  for (int i = 1; i < w0; ++i) middle.insert(i);
  if (as_sets(cells.two_sided) != std::set<std::set<int>>{{0}, middle, {w0}}) {
    return "two-sided cells are not {e}, middle, {w0}";
  }
  if (!shape_ok(cells.left) || !shape_ok(cells.right) || !shape_ok(cells.two_sided)) {
    return "cell order has the wrong shape";
  }
  return {};
}

SuiteReport run_verification_suite(int max_n, const std::vector<Annotation>& annotations) {
  std::vector<std::pair<std::string, Check>> checks;
  for (int n = 2; n <= max_n; ++n) {
    checks.emplace_back("dihedral n=" + std::to_string(n), [n] { return check_group(n); });
  }
  for (int n = 3; n <= max_n; ++n) {
    checks.emplace_back("kl-ring n=" + std::to_string(n), [n] { return check_kl_ring(n); });
    checks.emplace_back("subquotient n=" + std::to_string(n), [n] { return check_qn(n); });
  }
  checks.emplace_back("classify Q3", [&] { return check_classification("Q3", 2, annotations); });
  checks.emplace_back("classify Q4", [&] { return check_classification("Q4", 3, annotations); });
  checks.emplace_back("classify Q5", [&] { return check_classification("Q5", 2, annotations); });

  SuiteReport report;
  for (auto& [name, check] : checks) {
    std::string detail;
    try {
      detail = check();
    } catch (const std::exception& ex) {
      detail = std::string("exception: ") + ex.what();
    }
    report.checks.push_back({name, detail.empty(), detail});
  }
  return report;
}

}  // namespace klc
