#include "linelab/hypergraph.hpp"

#include <algorithm>
#include <string>

namespace linelab {

Triple Triple::of(int x, int y, int z) {
  if (x == y || y == z || x == z) throw std::invalid_argument("triple vertices must be distinct");
  if (x > y) std::swap(x, y);
  if (y > z) std::swap(y, z);
  if (x > y) std::swap(x, y);
  return Triple{x, y, z};
}

Triple triple_unrank(std::size_t rank) {
  int c = 2;
  while (binomial(c + 1, 3) <= rank) ++c;
  rank -= static_cast<std::size_t>(binomial(c, 3));
  int b = 1;
  while (binomial(b + 1, 2) <= rank) ++b;
  rank -= static_cast<std::size_t>(binomial(b, 2));
  return Triple{static_cast<int>(rank), b, c};
}

std::vector<int> members(VertexSet s) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(vertex_count(s)));
  while (s != 0) {
    out.push_back(__builtin_ctzll(s));
    s &= s - 1;
  }
  return out;
}

VertexSet all_vertices(int n) noexcept {
  return n >= 64 ? ~VertexSet{0} : (VertexSet{1} << n) - 1;
}

std::string format_vertex_set(VertexSet s) {
  std::string out = "{";
  bool first = true;
  for (int v : members(s)) {
    if (!first) out += ',';
    out += std::to_string(v);
    first = false;
  }
  out += '}';
  return out;
}

Hypergraph::Hypergraph(int n) : n_(n) {
  if (n < 0 || n > kMaxVertices) throw unsupported_size("vertex count must be in 0..64");
  bits_.assign((universe_size() + 63) / 64, 0);
}

Hypergraph::Hypergraph(int n, std::span<const Triple> edges) : Hypergraph(n) {
  for (const Triple& t : edges) {
    Triple s = Triple::of(t.a, t.b, t.c);
    check_vertex(s.c);
    if (s.a < 0) throw std::invalid_argument("negative vertex");
    set_rank(triple_rank(s));
  }
}

Hypergraph::Hypergraph(int n, std::initializer_list<Triple> edges)
    : Hypergraph(n, std::span<const Triple>(edges.begin(), edges.size())) {}

Hypergraph Hypergraph::complete(int n) {
  Hypergraph h(n);
  for (std::size_t r = 0; r < h.universe_size(); ++r) h.set_rank(r);
  return h;
}

Hypergraph Hypergraph::from_mask(int n, std::uint64_t mask) {
  if (n > 8) throw unsupported_size("single-word masks cover at most 8 vertices");
  Hypergraph h(n);
  const std::size_t universe = h.universe_size();
  if (universe < 64 && (mask >> universe) != 0) throw std::invalid_argument("mask has bits outside the triple universe");
  if (!h.bits_.empty()) h.bits_[0] = mask;
  return h;
}

std::size_t Hypergraph::edge_count() const noexcept {
  std::size_t count = 0;
  for (std::uint64_t w : bits_) count += static_cast<std::size_t>(__builtin_popcountll(w));
  return count;
}

void Hypergraph::check_vertex(int v) const {
  if (v < 0 || v >= n_) throw std::invalid_argument("vertex " + std::to_string(v) + " out of range");
}

bool Hypergraph::has_edge(const Triple& t) const {
  check_vertex(t.a);
  check_vertex(t.c);
  return has_rank(triple_rank(t));
}

bool Hypergraph::has_edge(int x, int y, int z) const { return has_edge(Triple::of(x, y, z)); }

std::vector<Triple> Hypergraph::edges() const {
  std::vector<Triple> out;
  out.reserve(edge_count());
  for (std::size_t w = 0; w < bits_.size(); ++w) {
    std::uint64_t word = bits_[w];
    while (word != 0) {
      out.push_back(triple_unrank(w * 64 + static_cast<std::size_t>(__builtin_ctzll(word))));
      word &= word - 1;
    }
  }
  return out;
}

std::uint64_t Hypergraph::mask() const {
  if (n_ > 8) throw unsupported_size("single-word masks cover at most 8 vertices");
  return bits_.empty() ? 0 : bits_[0];
}

int Hypergraph::degree(int v) const {
  check_vertex(v);
  int d = 0;
  for (int x = 0; x < n_; ++x)
    for (int y = x + 1; y < n_; ++y)
      if (x != v && y != v && has_rank(triple_rank(Triple::of(v, x, y)))) ++d;
  return d;
}

Hypergraph Hypergraph::complement() const {
  Hypergraph h(n_);
  for (std::size_t r = 0; r < universe_size(); ++r)
    if (!has_rank(r)) h.set_rank(r);
  return h;
}

std::uint64_t FourProfile::total() const noexcept {
  std::uint64_t t = 0;
  for (auto c : counts) t += c;
  return t;
}

Line line(const Hypergraph& h, int u, int v) {
  const int n = h.order();
  if (u == v) throw std::invalid_argument("line needs two distinct vertices");
  if (u < 0 || v < 0 || u >= n || v >= n) throw std::invalid_argument("line vertex out of range");
  Line l{std::min(u, v), std::max(u, v), (VertexSet{1} << u) | (VertexSet{1} << v)};
  for (int w = 0; w < n; ++w) {
    if (w == u || w == v) continue;
    if (h.has_rank(triple_rank(Triple::of(u, v, w)))) l.points |= VertexSet{1} << w;
  }
  return l;
}

std::vector<Line> pair_lines(const Hypergraph& h) {
  std::vector<Line> out;
  out.reserve(static_cast<std::size_t>(binomial(h.order(), 2)));
  for (int v = 1; v < h.order(); ++v)
    for (int u = 0; u < v; ++u) out.push_back(line(h, u, v));
  return out;
}

std::vector<VertexSet> all_lines(const Hypergraph& h) {
  if (h.order() < 2) throw std::invalid_argument("lines need at least two vertices");
  std::vector<VertexSet> out;
  for (const Line& l : pair_lines(h)) out.push_back(l.points);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool has_dbe_property(const Hypergraph& h) {
  const auto lines = all_lines(h);
  if (lines.size() >= static_cast<std::size_t>(h.order())) return true;
  return std::find(lines.begin(), lines.end(), h.vertices()) != lines.end();
}

Hypergraph induced(const Hypergraph& h, VertexSet w) {
  if ((w & ~h.vertices()) != 0) throw std::invalid_argument("induced: subset has vertices outside 0..n-1");
  const std::vector<int> keep = members(w);
  const int m = static_cast<int>(keep.size());
  std::vector<Triple> edges;
  for (int k = 2; k < m; ++k)
    for (int j = 1; j < k; ++j)
      for (int i = 0; i < j; ++i)
        if (h.has_rank(triple_rank(Triple{keep[static_cast<std::size_t>(i)], keep[static_cast<std::size_t>(j)],
                                          keep[static_cast<std::size_t>(k)]})))
          edges.push_back(Triple{i, j, k});
  return Hypergraph(m, edges);
}

Hypergraph relabel(const Hypergraph& h, std::span<const int> perm) {
  const int n = h.order();
  if (static_cast<int>(perm.size()) != n) throw std::invalid_argument("relabel: permutation has wrong length");
  VertexSet seen = 0;
  for (int p : perm) {
    if (p < 0 || p >= n || ((seen >> p) & 1U)) throw std::invalid_argument("relabel: not a permutation");
    seen |= VertexSet{1} << p;
  }
  std::vector<Triple> edges;
  for (const Triple& t : h.edges())
    edges.push_back(Triple::of(perm[static_cast<std::size_t>(t.a)], perm[static_cast<std::size_t>(t.b)],
                               perm[static_cast<std::size_t>(t.c)]));
  return Hypergraph(n, edges);
}

int induced_edge_count(const Hypergraph& h, int a, int b, int c, int d) {
  return static_cast<int>(h.has_edge(a, b, c)) + static_cast<int>(h.has_edge(a, b, d)) +
         static_cast<int>(h.has_edge(a, c, d)) + static_cast<int>(h.has_edge(b, c, d));
}

FourProfile four_profile(const Hypergraph& h) {
  const int n = h.order();
  if (n < 4) throw std::invalid_argument("four_profile needs at least four vertices");
  FourProfile p;
  for (int d = 3; d < n; ++d)
    for (int c = 2; c < d; ++c)
      for (int b = 1; b < c; ++b)
        for (int a = 0; a < b; ++a) {
          const int k = static_cast<int>(h.has_rank(triple_rank(Triple{a, b, c}))) +
                        static_cast<int>(h.has_rank(triple_rank(Triple{a, b, d}))) +
                        static_cast<int>(h.has_rank(triple_rank(Triple{a, c, d}))) +
                        static_cast<int>(h.has_rank(triple_rank(Triple{b, c, d})));
          ++p.counts[static_cast<std::size_t>(k)];
        }
  return p;
}

std::optional<std::array<int, 4>> multi_line_witness(const Hypergraph& h) {
  const int n = h.order();
  if (n < 2) throw std::invalid_argument("multi_line_witness needs at least two vertices");
  auto edge = [&](int x, int y, int z) { return h.has_rank(triple_rank(Triple::of(x, y, z))); };
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q) {
      if (q == p) continue;
      for (int r = 0; r < n; ++r) {
        if (r == p || r == q || !edge(p, q, r)) continue;
        for (int s = 0; s < n; ++s) {
          if (s == p || s == q || s == r) continue;
          if (edge(p, q, s) && !edge(p, r, s)) return std::array<int, 4>{p, q, r, s};
        }
      }
    }
  return std::nullopt;
}

}  // namespace linelab
