#include "linelab/reference.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <set>
#include <stdexcept>

namespace linelab::reference {
namespace {

std::uint64_t choose(int n, int k) {
  if (k < 0 || n < k) return 0;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

std::uint64_t rank_of(int x, int y, int z) {
  std::array<int, 3> t{x, y, z};
  std::sort(t.begin(), t.end());
  return choose(t[2], 3) + choose(t[1], 2) + static_cast<std::uint64_t>(t[0]);
}

std::vector<std::array<int, 3>> colex_triples(int n) {
  std::vector<std::array<int, 3>> out;
  for (int c = 2; c < n; ++c)
    for (int b = 1; b < c; ++b)
      for (int a = 0; a < b; ++a) out.push_back({a, b, c});
  return out;
}

bool lower_bit_string(std::uint64_t x, std::uint64_t y) {
  for (int i = 0; i < 64; ++i) {
    const auto bx = (x >> i) & 1U;
    const auto by = (y >> i) & 1U;
    if (bx != by) return bx == 0;
  }
  return false;
}

// Middle per triple rank, -1 for non-edges.
std::vector<int> middle_table(const Hypergraph& h, const MiddleVector& middles) {
  const auto edges = h.edges();
  if (edges.size() != middles.size()) throw std::invalid_argument("one middle per edge required");
  std::vector<int> table(choose(h.order(), 3), -1);
  for (std::size_t i = 0; i < edges.size(); ++i) table[rank_of(edges[i].a, edges[i].b, edges[i].c)] = middles[i];
  return table;
}

bool m3_on_table(int n, const std::vector<int>& table) {
  auto has = [&](int x, int m, int y) { return table[rank_of(x, m, y)] == m; };
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      for (int w = 0; w < n; ++w) {
        if (u == v || v == w || u == w || !has(u, v, w)) continue;
        for (int x = 0; x < n; ++x) {
          if (x == u || x == v || x == w || !has(u, w, x)) continue;
          if (!has(u, v, x) || !has(v, w, x)) return false;
        }
      }
  return true;
}

// Calls visit on each violation-free assignment until it returns false.
template <typename Visit>
void scan_assignments(const Hypergraph& h, Visit visit) {
  const auto edges = h.edges();
  std::vector<int> slot(edges.size(), 0);
  MiddleVector middles(edges.size());
  std::vector<int> table(choose(h.order(), 3), -1);
  std::vector<std::uint64_t> ranks;
  for (const auto& e : edges) ranks.push_back(rank_of(e.a, e.b, e.c));
  for (;;) {
    for (std::size_t i = 0; i < edges.size(); ++i) {
      const std::array<int, 3> t{edges[i].a, edges[i].b, edges[i].c};
      middles[i] = t[static_cast<std::size_t>(slot[i])];
      table[ranks[i]] = middles[i];
    }
    if (m3_on_table(h.order(), table) && !visit(middles)) return;
    std::size_t i = edges.size();
    while (i > 0 && slot[i - 1] == 2) slot[--i] = 0;
    if (i == 0) return;
    ++slot[i - 1];
  }
}

}  // namespace

std::uint64_t full_scan_minimum(int n, std::uint64_t mask) {
  if (n > 7) throw std::invalid_argument("full scan limited to 7 vertices");
  const auto triples = colex_triples(n);
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t best = 0;
  bool first = true;
  do {
    std::uint64_t bits = 0;
    for (std::size_t r = 0; r < triples.size(); ++r) {
      if (((mask >> r) & 1U) == 0) continue;
      const auto& t = triples[r];
      bits |= std::uint64_t{1} << rank_of(perm[static_cast<std::size_t>(t[0])], perm[static_cast<std::size_t>(t[1])],
                                          perm[static_cast<std::size_t>(t[2])]);
    }
    if (first || lower_bit_string(bits, best)) best = bits;
    first = false;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

std::vector<std::uint64_t> all_class_minima(int n) {
  if (n > 5) throw std::invalid_argument("naive class scan limited to 5 vertices");
  const std::uint64_t universe = choose(n, 3);
  std::set<std::uint64_t> seen;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << universe); ++mask) seen.insert(full_scan_minimum(n, mask));
  return {seen.begin(), seen.end()};
}

bool m3_holds(const Hypergraph& h, const MiddleVector& middles) { return m3_on_table(h.order(), middle_table(h, middles)); }

std::vector<MiddleVector> all_violation_free(const Hypergraph& h) {
  std::vector<MiddleVector> out;
  scan_assignments(h, [&](const MiddleVector& m) {
    out.push_back(m);
    return true;
  });
  return out;
}

bool pseudometric_by_scan(const Hypergraph& h) {
  bool found = false;
  scan_assignments(h, [&](const MiddleVector&) {
    found = true;
    return false;
  });
  return found;
}

std::optional<std::vector<int>> linear_order_by_scan(const Hypergraph& h, const MiddleVector& middles) {
  const auto table = middle_table(h, middles);
  const int n = h.order();
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  do {
    bool good = true;
    for (int i = 0; i < n && good; ++i)
      for (int j = i + 1; j < n && good; ++j)
        for (int k = j + 1; k < n && good; ++k) {
          good = table[rank_of(order[static_cast<std::size_t>(i)], order[static_cast<std::size_t>(j)],
                               order[static_cast<std::size_t>(k)])] == order[static_cast<std::size_t>(j)];
        }
    if (good) return order;
  } while (std::next_permutation(order.begin(), order.end()));
  return std::nullopt;
}

std::vector<VertexSet> lines_by_scan(const Hypergraph& h) {
  const int n = h.order();
  std::set<VertexSet> lines;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      VertexSet s = (VertexSet{1} << u) | (VertexSet{1} << v);
      for (int w = 0; w < n; ++w)
        if (w != u && w != v && h.has_edge(Triple::of(u, v, w))) s |= VertexSet{1} << w;
      lines.insert(s);
    }
  return {lines.begin(), lines.end()};
}

bool pair_in_two_lines(const Hypergraph& h) {
  const auto lines = lines_by_scan(h);
  const int n = h.order();
  for (int p = 0; p < n; ++p)
    for (int q = p + 1; q < n; ++q) {
      const VertexSet pq = (VertexSet{1} << p) | (VertexSet{1} << q);
      int containing = 0;
      for (VertexSet line : lines)
        if ((line & pq) == pq) ++containing;
      if (containing >= 2) return true;
    }
  return false;
}

std::vector<std::uint64_t> four_counts_by_scan(const Hypergraph& h) {
  const int n = h.order();
  std::vector<std::uint64_t> counts(5, 0);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c)
        for (int d = c + 1; d < n; ++d) {
          const int e = static_cast<int>(h.has_edge(Triple{a, b, c})) + static_cast<int>(h.has_edge(Triple{a, b, d})) +
                        static_cast<int>(h.has_edge(Triple{a, c, d})) + static_cast<int>(h.has_edge(Triple{b, c, d}));
          ++counts[static_cast<std::size_t>(e)];
        }
  return counts;
}

}  // namespace linelab::reference
