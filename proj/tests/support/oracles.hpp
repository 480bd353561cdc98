#pragma once

// Reference implementations used only by the tests. None of them call into
// the library's group, Kazhdan-Lusztig or search code; they work from the
// action of D_{2n} on an n-gon and from plain enumeration.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "klc/basedring.hpp"
#include "klc/matrix_module.hpp"

namespace oracle {

using Perm = std::vector<int>;

// Action on the n vertices (points 0..n-1) and n edges (points n..2n-1, edge
// j joining vertices j and j+1) of an n-gon; faithful even for n = 2. s sends
// vertex i to -i and edge j to -j-1; t sends vertex i to 1-i and edge j to -j.
inline Perm generator(int n, char g) {
  auto mod = [n](int v) { return (v % n + n) % n; };
  Perm p(2 * n);
  for (int i = 0; i < n; ++i) {
    p[i] = mod(g == 's' ? -i : 1 - i);
    p[n + i] = n + mod(g == 's' ? -i - 1 : -i);
  }
  return p;
}

inline Perm identity_perm(int n) {
  Perm p(2 * n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

// Word read left to right as a composition of maps, rightmost applied first.
inline Perm evaluate(int n, const std::string& word) {
  Perm p = identity_perm(n);
  for (char g : word) {
    const Perm q = generator(n, g);
    Perm r(2 * n);
    for (int i = 0; i < 2 * n; ++i) r[i] = p[q[i]];
    p = r;
  }
  return p;
}

// All group elements by breadth-first search, each with one shortest word.
struct Group {
  int n = 0;
  std::vector<Perm> perms;
  std::vector<std::string> words;
  std::map<Perm, int> index;

  explicit Group(int n_) : n(n_) {
    perms.push_back(identity_perm(n));
    words.push_back("");
    index[perms[0]] = 0;
    for (std::size_t head = 0; head < perms.size(); ++head) {
      for (char g : {'s', 't'}) {
        const std::string w = words[head] + g;
        const Perm p = evaluate(n, w);
        if (index.count(p)) continue;
        index[p] = static_cast<int>(perms.size());
        perms.push_back(p);
        words.push_back(w);
      }
    }
  }
  int size() const { return static_cast<int>(perms.size()); }
  int length(int i) const { return static_cast<int>(words[i].size()); }
  int of_word(const std::string& w) const { return index.at(evaluate(n, w)); }
  int multiply(int a, int b) const { return of_word(words[a] + words[b]); }
  std::string label(int i) const {
    if (words[i].empty()) return "e";
    if (length(i) == n) return "w0";
    return words[i];
  }
};

// Elements obtained from subsequences of `word`, by trying all 2^len masks.
inline std::set<int> subword_set(const Group& g, const std::string& word) {
  std::set<int> out;
  const std::size_t len = word.size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << len); ++mask) {
    std::string sub;
    for (std::size_t i = 0; i < len; ++i) {
      if (mask >> i & 1) sub += word[i];
    }
    out.insert(g.of_word(sub));
  }
  return out;
}

inline bool bruhat_leq(const Group& g, int u, int v) {
  return subword_set(g, g.words[v]).count(u) > 0;
}

// Structure constants of the Kazhdan-Lusztig basis, keyed by labels, by
// expanding products in the group ring and peeling off the top element.
inline std::map<std::string, std::map<std::string, std::map<std::string, std::int64_t>>>
kl_constants(int n) {
  const Group g(n);
  const int size = g.size();
  std::vector<std::vector<std::int64_t>> basis(size, std::vector<std::int64_t>(size, 0));
  for (int w = 0; w < size; ++w) {
    for (int v : subword_set(g, g.words[w])) basis[w][v] = 1;
  }
  std::vector<int> by_length(size);
  std::iota(by_length.begin(), by_length.end(), 0);
  std::stable_sort(by_length.begin(), by_length.end(),
                   [&](int a, int b) { return g.length(a) > g.length(b); });

  std::map<std::string, std::map<std::string, std::map<std::string, std::int64_t>>> out;
  for (int x = 0; x < size; ++x) {
    for (int y = 0; y < size; ++y) {
      std::vector<std::int64_t> prod(size, 0);
      for (int a = 0; a < size; ++a) {
        for (int b = 0; b < size; ++b) {
          if (basis[x][a] && basis[y][b]) prod[g.multiply(a, b)] += basis[x][a] * basis[y][b];
        }
      }
      auto& row = out[g.label(x)][g.label(y)];
      for (int w : by_length) {
        const std::int64_t k = prod[w];
        if (k == 0) continue;
        row[g.label(w)] = k;
        for (int v = 0; v < size; ++v) prod[v] -= k * basis[w][v];
      }
    }
  }
  return out;
}

// Closed-form cells of the full ring of D_{2n} as sets of labels: {e}, words
// ending in s, words ending in t, {w0} on the left; by first letter on the
// right; {e}, everything else, {w0} two-sided.
inline std::set<std::set<std::string>> expected_cells(int n, char side) {
  const Group g(n);
  std::set<std::string> e{"e"}, w0{"w0"}, s_side, t_side, middle;
  for (int i = 0; i < g.size(); ++i) {
    const int l = g.length(i);
    if (l == 0 || l == n) continue;
    const std::string& w = g.words[i];
    middle.insert(w);
    const char key = side == 'L' ? w.back() : w.front();
    (key == 's' ? s_side : t_side).insert(w);
  }
  if (side == 'J') return {e, middle, w0};
  return {e, s_side, t_side, w0};
}

// Integer matrices as flat row-major vectors.
using Flat = std::vector<std::int64_t>;

inline Flat mat_mul(const Flat& a, const Flat& b, int r) {
  Flat c(r * r, 0);
  for (int i = 0; i < r; ++i)
    for (int k = 0; k < r; ++k)
      for (int j = 0; j < r; ++j) c[i * r + j] += a[i * r + k] * b[k * r + j];
  return c;
}

// Canonical form of a tuple of matrices (one per label, identity included)
// under simultaneous relabeling of the basis: smallest concatenation.
inline std::vector<Flat> canonical(const std::vector<Flat>& mats, int r) {
  std::vector<int> perm(r);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<Flat> best;
  do {
    std::vector<Flat> cand;
    for (const auto& m : mats) {
      Flat p(r * r);
      for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) p[perm[i] * r + perm[j]] = m[i * r + j];
      cand.push_back(p);
    }
    if (best.empty() || cand < best) best = cand;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

inline std::vector<Flat> to_flats(const klc::MatrixModule& m) {
  std::vector<Flat> out;
  for (const auto& mat : m.matrices) {
    Flat f;
    for (int i = 0; i < m.rank; ++i)
      for (int j = 0; j < m.rank; ++j) f.push_back(mat(i, j));
    out.push_back(f);
  }
  return out;
}

// Every transitive module of rank r with entries in [0, bound]: nested loops
// over all matrices per label, each relation tested once all its matrices are
// fixed. No bounds reasoning beyond that.
inline std::set<std::vector<Flat>> brute_force_modules(const klc::BasedRing& ring, int r,
                                                      std::int64_t bound) {
  const int size = ring.size();
  const int cells = r * r;
  Flat id(cells, 0);
  for (int i = 0; i < r; ++i) id[i * r + i] = 1;

  std::vector<Flat> all;
  Flat cur(cells, 0);
  while (true) {
    all.push_back(cur);
    int k = 0;
    while (k < cells && cur[k] == bound) cur[k++] = 0;
    if (k == cells) break;
    ++cur[k];
  }

  std::vector<Flat> mats(size);
  mats[ring.identity_index] = id;
  std::vector<int> order;
  for (int b = 0; b < size; ++b)
    if (b != ring.identity_index) order.push_back(b);

  std::set<std::vector<Flat>> out;
  std::vector<bool> assigned(size, false);
  assigned[ring.identity_index] = true;

  auto relation_holds = [&](int x, int y) {
    Flat rhs(cells, 0);
    for (int z = 0; z < size; ++z) {
      const std::int64_t c = ring.c(x, y, z);
      if (c == 0) continue;
      for (int i = 0; i < cells; ++i) rhs[i] += c * mats[z][i];
    }
    return mat_mul(mats[x], mats[y], r) == rhs;
  };
  auto complete = [&](int x, int y) {
    if (!assigned[x] || !assigned[y]) return false;
    for (int z = 0; z < size; ++z)
      if (ring.c(x, y, z) != 0 && !assigned[z]) return false;
    return true;
  };

  std::function<void(std::size_t)> rec = [&](std::size_t depth) {
    if (depth == order.size()) {
      Flat total(cells, 0);
      for (const auto& m : mats)
        for (int i = 0; i < cells; ++i) total[i] += m[i];
      if (std::all_of(total.begin(), total.end(), [](std::int64_t v) { return v > 0; }))
        out.insert(canonical(mats, r));
      return;
    }
    const int b = order[depth];
    assigned[b] = true;
    for (const auto& m : all) {
      mats[b] = m;
      bool ok = true;
      for (int x = 0; x < size && ok; ++x) {
        for (int y = 0; y < size && ok; ++y) {
          // only relations that became complete with this label
          bool fresh = x == b || y == b;
          for (int z = 0; z < size && !fresh; ++z) fresh = z == b && ring.c(x, y, z) != 0;
          if (fresh && complete(x, y)) ok = relation_holds(x, y);
        }
      }
      if (ok) rec(depth + 1);
    }
    assigned[b] = false;
  };
  rec(0);
  return out;
}

}  // namespace oracle
