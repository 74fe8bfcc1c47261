// Brute-force reference computations for the tests. Only data containers are
// shared with the library; every algorithm here is a naive re-derivation.
#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace oracle {

using Pair = std::pair<int, int>;
using EdgeList = std::vector<Pair>;
using Q = mpq_class;

struct Orbit {
  bool zero = false;
  EdgeList canonical;
  int sign = 1;  // g = sign * canonical
};

inline std::vector<int> valences(int n, const EdgeList& edges) {
  std::vector<int> val(static_cast<std::size_t>(n), 0);
  for (auto [t, h] : edges) {
    ++val[static_cast<std::size_t>(t - 1)];
    ++val[static_cast<std::size_t>(h - 1)];
  }
  return val;
}

inline int parity(const std::vector<int>& p) {
  int inv = 0;
  for (std::size_t a = 0; a < p.size(); ++a)
    for (std::size_t b = a + 1; b < p.size(); ++b)
      if (p[a] > p[b]) ++inv;
  return inv % 2 == 0 ? 1 : -1;
}

/**
 * Scans every vertex permutation, reversal pattern and (optionally) edge
 * permutation. Canonical: least edge list with tail < head everywhere (sorted
 * when edges may be renumbered) among labelings giving non-increasing valence.
 */
inline Orbit orbit(int n, const EdgeList& g, bool renumber) {
  const std::size_t m = g.size();
  const auto val = valences(n, g);
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 1);
  Orbit best;
  bool have = false;
  std::vector<int> signs_seen;
  do {
    // perm[v-1] = new label of v
    std::vector<int> new_val(static_cast<std::size_t>(n));
    for (int v = 1; v <= n; ++v) new_val[static_cast<std::size_t>(perm[v - 1] - 1)] = val[v - 1];
    const bool cells_ok = std::is_sorted(new_val.begin(), new_val.end(), std::greater<>());
    const int p = parity(perm);
    for (unsigned mask = 0; mask < (1U << m); ++mask) {
      EdgeList img;
      int l = 0;
      for (std::size_t k = 0; k < m; ++k) {
        int t = perm[static_cast<std::size_t>(g[k].first - 1)];
        int h = perm[static_cast<std::size_t>(g[k].second - 1)];
        if (mask >> k & 1U) {
          std::swap(t, h);
          ++l;
        }
        img.push_back({t, h});
      }
      const int s = p * (l % 2 == 0 ? 1 : -1);
      std::vector<std::size_t> order(m);
      std::iota(order.begin(), order.end(), 0);
      do {
        EdgeList re;
        for (std::size_t k : order) re.push_back(img[k]);
        if (re == g) signs_seen.push_back(s);
        const bool oriented = std::all_of(re.begin(), re.end(), [](Pair e) { return e.first < e.second; });
        const bool sorted = !renumber || std::is_sorted(re.begin(), re.end());
        if (cells_ok && oriented && sorted && (!have || re < best.canonical)) {
          best.canonical = re;
          best.sign = s;
          have = true;
        }
      } while (renumber && std::next_permutation(order.begin(), order.end()));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  best.zero = std::find(signs_seen.begin(), signs_seen.end(), -1) != signs_seen.end();
  return best;
}

inline bool connected(int n, const EdgeList& edges) {
  std::vector<int> comp(static_cast<std::size_t>(n));
  std::iota(comp.begin(), comp.end(), 0);
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto [t, h] : edges) {
      int& a = comp[static_cast<std::size_t>(t - 1)];
      int& b = comp[static_cast<std::size_t>(h - 1)];
      if (a != b) {
        a = b = std::min(a, b);
        changed = true;
      }
    }
  }
  return std::all_of(comp.begin(), comp.end(), [&](int c) { return c == comp[0]; });
}

/// Every loop-free multigraph on n vertices with all valences equal to `valence`,
/// as sorted pair lists.
inline std::vector<EdgeList> regular_multigraphs(int n, int valence) {
  std::vector<Pair> pairs;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) pairs.push_back({i, j});
  std::vector<EdgeList> out;
  std::vector<int> mult(pairs.size(), 0);
  while (true) {
    EdgeList e;
    for (std::size_t k = 0; k < pairs.size(); ++k)
      for (int r = 0; r < mult[k]; ++r) e.push_back(pairs[k]);
    const auto val = valences(n, e);
    if (std::all_of(val.begin(), val.end(), [&](int v) { return v == valence; })) out.push_back(e);
    std::size_t k = 0;
    while (k < mult.size() && ++mult[k] > valence) mult[k++] = 0;
    if (k == mult.size()) break;
  }
  return out;
}

/// Nonzero trivalent classes with 2m vertices, as sets of oracle canonical forms.
inline std::set<EdgeList> trivalent_classes(int m, bool require_connected, bool renumber) {
  std::set<EdgeList> classes;
  for (EdgeList shape : regular_multigraphs(2 * m, 3)) {
    if (require_connected && !connected(2 * m, shape)) continue;
    std::sort(shape.begin(), shape.end());
    do {
      const Orbit o = orbit(2 * m, shape, renumber);
      if (!o.zero) classes.insert(o.canonical);
      if (renumber) break;
    } while (std::next_permutation(shape.begin(), shape.end()));
  }
  return classes;
}

/// Nonzero classes with n vertices and m edges, every valence >= min_valence.
inline std::set<EdgeList> classes(int n, int m, int min_valence, bool require_connected, bool renumber) {
  std::vector<Pair> pairs;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) pairs.push_back({i, j});
  std::set<EdgeList> out;
  std::vector<int> mult(pairs.size(), 0);
  while (true) {
    EdgeList shape;
    for (std::size_t k = 0; k < pairs.size(); ++k)
      for (int r = 0; r < mult[k]; ++r) shape.push_back(pairs[k]);
    const auto val = valences(n, shape);
    if (static_cast<int>(shape.size()) == m &&
        std::all_of(val.begin(), val.end(), [&](int v) { return v >= min_valence; }) &&
        (!require_connected || connected(n, shape))) {
      do {
        const Orbit o = orbit(n, shape, renumber);
        if (!o.zero) out.insert(o.canonical);
        if (renumber) break;
      } while (std::next_permutation(shape.begin(), shape.end()));
    }
    std::size_t k = 0;
    while (k < mult.size() && ++mult[k] > m) mult[k++] = 0;
    if (k == mult.size()) break;
  }
  return out;
}

/// Contraction by name: drop edge e, send both endpoints to min(i,j), then
/// relabel survivors by rank. Sign from the closed formula.
inline std::pair<EdgeList, int> contract(int n, const EdgeList& g, int e) {
  const auto [i, j] = g[static_cast<std::size_t>(e - 1)];
  const int lo = std::min(i, j), hi = std::max(i, j);
  std::vector<int> survivors;
  for (int v = 1; v <= n; ++v)
    if (v != hi) survivors.push_back(v);
  auto rank = [&](int v) {
    if (v == hi) v = lo;
    return static_cast<int>(std::find(survivors.begin(), survivors.end(), v) - survivors.begin()) + 1;
  };
  EdgeList out;
  for (std::size_t k = 0; k < g.size(); ++k)
    if (static_cast<int>(k) != e - 1) out.push_back({rank(g[k].first), rank(g[k].second)});
  const int sign = j > i ? (j % 2 == 0 ? 1 : -1) : ((i + 1) % 2 == 0 ? 1 : -1);
  return {out, sign};
}

inline bool regular(const EdgeList& g, int e) {
  const auto [i, j] = g[static_cast<std::size_t>(e - 1)];
  return std::count_if(g.begin(), g.end(), [&](Pair p) {
           return std::minmax(p.first, p.second) == std::minmax(i, j);
         }) == 1;
}

/// delta of one graph expanded in oracle canonical forms.
inline std::map<EdgeList, Q> delta(int n, const EdgeList& g, bool renumber) {
  std::map<EdgeList, Q> out;
  for (int e = 1; e <= static_cast<int>(g.size()); ++e) {
    if (!regular(g, e)) continue;
    const auto [h, s] = contract(n, g, e);
    const Orbit o = orbit(n - 1, h, renumber);
    if (o.zero) continue;
    out[o.canonical] += s * o.sign;
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

// ---------------------------------------------------------------------------
// SU(2) via weights: multiplicity of spin l is N(weight l) - N(weight l + 1).

inline std::map<int, long> multiplicities_by_weights(const std::vector<int>& twice_spins) {
  std::map<int, long> weights{{0, 1}};
  for (int tj : twice_spins) {
    std::map<int, long> next;
    for (auto [w, c] : weights)
      for (int m = -tj; m <= tj; m += 2) next[w + m] += c;
    weights = next;
  }
  std::map<int, long> out;
  for (auto [w, c] : weights) {
    if (w < 0) continue;
    const long above = weights.count(w + 2) ? weights.at(w + 2) : 0;
    if (c - above != 0) out[w] = c - above;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Dense exact rank by plain Gaussian elimination.

inline std::size_t dense_rank(std::vector<std::vector<Q>> a) {
  std::size_t r = 0;
  const std::size_t cols = a.empty() ? 0 : a[0].size();
  for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
    std::size_t p = r;
    while (p < a.size() && a[p][c] == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == r || a[i][c] == 0) continue;
      const Q f = a[i][c] / a[r][c];
      for (std::size_t k = c; k < cols; ++k) a[i][k] -= f * a[r][k];
    }
    ++r;
  }
  return r;
}

// ---------------------------------------------------------------------------
// Tensors as index functions.

inline int levi(int a, int b, int c) {
  if (a == b || b == c || a == c) return 0;
  return parity({a, b, c});
}

/// Sum over every assignment of a basis index to each edge of the product of
/// vertex values; `vertex_value(v, indices)` sees v's edges in ascending order.
template <class T, class F>
T full_sum(int n, const EdgeList& g, int dim, F&& vertex_value) {
  std::vector<std::vector<int>> incident(static_cast<std::size_t>(n));
  for (std::size_t k = 0; k < g.size(); ++k) {
    incident[static_cast<std::size_t>(g[k].first - 1)].push_back(static_cast<int>(k));
    incident[static_cast<std::size_t>(g[k].second - 1)].push_back(static_cast<int>(k));
  }
  std::vector<int> x(g.size(), 0);
  T total = 0;
  while (true) {
    T term = 1;
    for (int v = 1; v <= n; ++v) {
      std::vector<int> idx;
      for (int k : incident[static_cast<std::size_t>(v - 1)]) idx.push_back(x[static_cast<std::size_t>(k)]);
      term *= vertex_value(v, idx);
    }
    total += term;
    std::size_t k = 0;
    while (k < x.size() && ++x[k] == dim) x[k++] = 0;
    if (k == x.size()) break;
  }
  return total;
}

}  // namespace oracle
