#include "klc/basedring.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "klc/klring.hpp"

namespace klc {

int BasedRing::find(const std::string& label) const {
  auto it = std::find(labels.begin(), labels.end(), label);
  return it == labels.end() ? -1 : static_cast<int>(it - labels.begin());
}

int BasedRing::index_of(const std::string& label) const {
  int i = find(label);
  if (i < 0) throw std::out_of_range("based ring has no basis element '" + label + "'");
  return i;
}

bool BasedRing::is_commutative() const {
  for (int x = 0; x < size(); ++x)
    for (int y = x + 1; y < size(); ++y)
      for (int z = 0; z < size(); ++z)
        if (c(x, y, z) != c(y, x, z)) return false;
  return true;
}

std::string VerificationReport::summary() const {
  if (ok()) return "pass";
  std::ostringstream out;
  out << "fail (" << violations.size() << " violations)";
  for (const auto& v : violations) {
    out << "\n  " << v.axiom << " at (";
    for (std::size_t i = 0; i < v.witness.size(); ++i) out << (i ? "," : "") << v.witness[i];
    out << "): " << v.detail;
  }
  return out.str();
}

VerificationReport verify(const BasedRing& ring) {
  VerificationReport report;
  auto fail = [&](std::string axiom, std::vector<int> witness, std::string detail) {
    report.violations.push_back({std::move(axiom), std::move(witness), std::move(detail)});
  };
  const int n = ring.size();
  if (ring.c.size() != n) {
    fail("shape", {}, "structure tensor size does not match the label count");
    return report;
  }
  if (ring.identity_index < 0 || ring.identity_index >= n) {
    fail("identity", {}, "identity index out of range");
    return report;
  }
  const int e = ring.identity_index;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (ring.c(x, y, z) < 0) fail("non-negativity", {x, y, z}, "negative structure constant");
  for (int y = 0; y < n; ++y) {
    for (int z = 0; z < n; ++z) {
      const std::int64_t delta = y == z ? 1 : 0;
      if (ring.c(e, y, z) != delta) fail("left identity", {e, y, z}, "e * y != y");
      if (ring.c(y, e, z) != delta) fail("right identity", {y, e, z}, "y * e != y");
    }
  }
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      for (int z = 0; z < n; ++z) {
        for (int v = 0; v < n; ++v) {
          std::int64_t lhs = 0;
          std::int64_t rhs = 0;
          for (int u = 0; u < n; ++u) {
            lhs += ring.c(x, y, u) * ring.c(u, z, v);
            rhs += ring.c(y, z, u) * ring.c(x, u, v);
          }
          if (lhs != rhs) {
            fail("associativity", {x, y, z, v},
                 "(xy)z and x(yz) differ in coefficient: " + std::to_string(lhs) + " vs " +
                     std::to_string(rhs));
          }
        }
      }
    }
  }
  if (static_cast<int>(ring.involution.size()) != n) {
    fail("involution", {}, "involution must list one image per label");
    return report;
  }
  std::vector<int> sorted = ring.involution;
  std::sort(sorted.begin(), sorted.end());
  std::vector<int> expected(n);
  std::iota(expected.begin(), expected.end(), 0);
  if (sorted != expected) {
    fail("involution", {}, "involution is not a permutation");
    return report;
  }
  for (int x = 0; x < n; ++x) {
    if (ring.involution[ring.involution[x]] != x) fail("involution", {x}, "not an involution");
  }
  const auto& star = ring.involution;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (ring.c(x, y, z) != ring.c(star[y], star[x], star[z]))
          fail("anti-automorphism", {x, y, z}, "c[x,y,z] != c[y*,x*,z*]");
  return report;
}

BasedRing make_based_ring(std::vector<std::string> labels, int identity_index, StructureTensor c,
                          std::vector<int> involution) {
  if (involution.empty()) {
    involution.resize(labels.size());
    std::iota(involution.begin(), involution.end(), 0);
  }
  BasedRing ring{std::move(labels), identity_index, std::move(c), std::move(involution)};
  if (auto report = verify(ring); !report.ok()) {
    throw std::invalid_argument("not a based ring: " + report.summary());
  }
  return ring;
}

BasedRing full_kl_ring(int n) {
  auto kl = cached_structure_constants(n);
  const GroupParams& params = kl->params;
  std::vector<int> involution;
  for (const auto& w : kl->elements) involution.push_back(element_index(params, inverse(params, w)));
  return make_based_ring(kl->labels, 0, kl->c, std::move(involution));
}

BasedRing based_subring(const BasedRing& ring, const std::vector<std::string>& labels) {
  std::vector<int> index;
  for (const auto& l : labels) index.push_back(ring.index_of(l));
  const int size = static_cast<int>(labels.size());
  StructureTensor c(size);
  for (int x = 0; x < size; ++x) {
    for (int y = 0; y < size; ++y) {
      for (int z = 0; z < ring.size(); ++z) {
        const std::int64_t k = ring.c(index[x], index[y], z);
        if (k == 0) continue;
        auto pos = std::find(index.begin(), index.end(), z);
        if (pos == index.end()) {
          throw std::invalid_argument("based_subring: " + labels[x] + " * " + labels[y] +
                                      " leaves the span (contains " + ring.labels[z] + ")");
        }
        c(x, y, static_cast<int>(pos - index.begin())) = k;
      }
    }
  }
  std::vector<int> involution;
  for (int i : index) {
    auto pos = std::find(index.begin(), index.end(), ring.involution[i]);
    if (pos == index.end()) throw std::invalid_argument("based_subring: not involution-stable");
    involution.push_back(static_cast<int>(pos - index.begin()));
  }
  const int identity = static_cast<int>(
      std::find(index.begin(), index.end(), ring.identity_index) - index.begin());
  if (identity == size) throw std::invalid_argument("based_subring: identity missing");
  return make_based_ring(labels, identity, std::move(c), std::move(involution));
}

BasedRing subquotient_qn(int n) {
  if (n < 3) throw std::invalid_argument("subquotient_qn: n must be at least 3");
  auto kl = cached_structure_constants(n);
  std::vector<int> basis{0};
  std::vector<std::string> labels{"e"};
  for (int len = 1; len < n; len += 2) {
    const auto w = DihedralElement::word(Letter::S, len);
    basis.push_back(element_index(kl->params, w));
    labels.push_back(w.label());
  }
  const int w0 = kl->params.order() - 1;
  const int size = static_cast<int>(basis.size());
  StructureTensor c(size);
  for (int x = 0; x < size; ++x) {
    for (int y = 0; y < size; ++y) {
      for (int z = 0; z < kl->params.order(); ++z) {
        const std::int64_t k = kl->c(basis[x], basis[y], z);
        if (k == 0 || z == w0) continue;
        auto pos = std::find(basis.begin(), basis.end(), z);
        if (pos == basis.end()) {
          throw std::logic_error("subquotient_qn: " + labels[x] + " * " + labels[y] +
                                 " has support on " + kl->labels[z] + " outside the basis and w0");
        }
        c(x, y, static_cast<int>(pos - basis.begin())) = k;
      }
    }
  }
  return make_based_ring(std::move(labels), 0, std::move(c));
}

BasedRing subring_an(int n) {
  if (n < 3) throw std::invalid_argument("subring_an: n must be at least 3");
  return based_subring(full_kl_ring(n), {"e", "s"});
}

CellPartition cells_of(const BasedRing& ring) { return compute_cells(ring.c); }

nlohmann::json ring_to_json(const BasedRing& ring) {
  nlohmann::json constants = nlohmann::json::array();
  for (int x = 0; x < ring.size(); ++x)
    for (int y = 0; y < ring.size(); ++y)
      for (int z = 0; z < ring.size(); ++z)
        if (ring.c(x, y, z) > 0) constants.push_back({x, y, z, ring.c(x, y, z)});
  return {{"labels", ring.labels},
          {"identity", ring.identity_index},
          {"involution", ring.involution},
          {"constants", constants}};
}

BasedRing ring_from_json(const nlohmann::json& j) {
  try {
    auto labels = j.at("labels").get<std::vector<std::string>>();
    const int size = static_cast<int>(labels.size());
    StructureTensor c(size);
    for (const auto& q : j.at("constants")) {
      if (!q.is_array() || q.size() != 4) {
        throw std::invalid_argument("ring file: constants must be [x, y, z, c] quadruples");
      }
      const int x = q[0].get<int>(), y = q[1].get<int>(), z = q[2].get<int>();
      if (std::min({x, y, z}) < 0 || std::max({x, y, z}) >= size) {
        throw std::invalid_argument("ring file: constant index out of range");
      }
      c(x, y, z) = q[3].get<std::int64_t>();
    }
    std::vector<int> involution;
    if (j.contains("involution")) involution = j.at("involution").get<std::vector<int>>();
    return make_based_ring(std::move(labels), j.at("identity").get<int>(), std::move(c),
                           std::move(involution));
  } catch (const nlohmann::json::exception& ex) {
    throw std::invalid_argument(std::string("ring file: ") + ex.what());
  }
}

BasedRing load_ring_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open ring file '" + path + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::parse_error& ex) {
    throw std::invalid_argument("ring file '" + path + "': " + ex.what());
  }
  return ring_from_json(j);
}

}  // namespace klc
