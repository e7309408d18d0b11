#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace linelab {

/// Vertices are dense integers 0..n-1; subsets of them fit in one word.
inline constexpr int kMaxVertices = 64;

/// Bit v is set iff vertex v is a member.
using VertexSet = std::uint64_t;

/// Raised when an operation is asked to work outside the size regime it
/// supports (for example canonical forms above eight vertices).
class unsupported_size : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

constexpr std::uint64_t binomial(int n, int k) {
  if (k < 0 || n < k) return 0;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

/// An unordered vertex triple, stored sorted: a < b < c.
struct Triple {
  int a = 0;
  int b = 1;
  int c = 2;

  /// Sorts its arguments; throws std::invalid_argument unless they are distinct.
  static Triple of(int x, int y, int z);

  constexpr bool contains(int v) const noexcept { return v == a || v == b || v == c; }
  constexpr VertexSet vertex_set() const noexcept {
    return (VertexSet{1} << a) | (VertexSet{1} << b) | (VertexSet{1} << c);
  }
  friend constexpr bool operator==(const Triple&, const Triple&) = default;
};

/// Colexicographic rank: C(c,3) + C(b,2) + a. Triples inside {0..m-1} occupy
/// the prefix [0, C(m,3)), which fixes the bitset layout.
constexpr std::size_t triple_rank(const Triple& t) noexcept {
  return static_cast<std::size_t>(binomial(t.c, 3) + binomial(t.b, 2) + static_cast<std::uint64_t>(t.a));
}
Triple triple_unrank(std::size_t rank);

/// Colex rank of the pair a < b: C(b,2) + a.
constexpr std::size_t pair_rank(int a, int b) noexcept {
  if (a > b) std::swap(a, b);
  return static_cast<std::size_t>(binomial(b, 2) + static_cast<std::uint64_t>(a));
}

inline int vertex_count(VertexSet s) noexcept { return __builtin_popcountll(s); }
std::vector<int> members(VertexSet s);
VertexSet all_vertices(int n) noexcept;
/// "{0,3,5}"
std::string format_vertex_set(VertexSet s);

/// A 3-uniform hypergraph on vertices 0..n-1. Hyperedges live in a bitset
/// over the C(n,3) triple universe indexed by triple_rank. Values are
/// immutable once built; every operation returns a new value.
class Hypergraph {
 public:
  Hypergraph() = default;
  /// Edgeless hypergraph on n vertices.
  explicit Hypergraph(int n);
  Hypergraph(int n, std::span<const Triple> edges);
  Hypergraph(int n, std::initializer_list<Triple> edges);

  static Hypergraph complete(int n);
  /// Bit r of mask is the triple of rank r. Requires n <= 8.
  static Hypergraph from_mask(int n, std::uint64_t mask);

  int order() const noexcept { return n_; }
  std::size_t edge_count() const noexcept;
  std::size_t universe_size() const noexcept { return static_cast<std::size_t>(binomial(n_, 3)); }

  bool has_edge(const Triple& t) const;
  bool has_edge(int x, int y, int z) const;
  /// Unchecked lookup for hot loops; the caller guarantees a valid triple.
  bool has_rank(std::size_t rank) const noexcept { return (bits_[rank >> 6] >> (rank & 63)) & 1U; }

  /// Hyperedges in colex order.
  std::vector<Triple> edges() const;
  /// The edge bitset as a single word. Requires n <= 8.
  std::uint64_t mask() const;
  std::span<const std::uint64_t> words() const noexcept { return bits_; }

  VertexSet vertices() const noexcept { return all_vertices(n_); }
  /// Number of hyperedges through v.
  int degree(int v) const;
  Hypergraph complement() const;

  friend bool operator==(const Hypergraph&, const Hypergraph&) = default;

 private:
  void set_rank(std::size_t rank) noexcept { bits_[rank >> 6] |= std::uint64_t{1} << (rank & 63); }
  void check_vertex(int v) const;

  int n_ = 0;
  std::vector<std::uint64_t> bits_;
};

/// The line through u and v: {u,v} together with every w such that
/// {u,v,w} is a hyperedge.
struct Line {
  int u = 0;
  int v = 1;
  VertexSet points = 0;
};

/// counts[i] is the number of 4-vertex subsets inducing exactly i hyperedges.
struct FourProfile {
  std::array<std::uint64_t, 5> counts{};
  std::uint64_t total() const noexcept;
  friend bool operator==(const FourProfile&, const FourProfile&) = default;
};

/// Throws std::invalid_argument when u == v or either is out of range.
Line line(const Hypergraph& h, int u, int v);

/// One Line per pair u < v, pairs in colex order.
std::vector<Line> pair_lines(const Hypergraph& h);

/// Distinct point sets among all lines, ascending by bit pattern.
/// Throws std::invalid_argument when n < 2.
std::vector<VertexSet> all_lines(const Hypergraph& h);

/// At least n distinct lines, or some line equals the whole vertex set.
bool has_dbe_property(const Hypergraph& h);

/// Sub-hypergraph induced by w, relabeled 0..|w|-1 in increasing order.
Hypergraph induced(const Hypergraph& h, VertexSet w);

/// Vertex v of h becomes vertex perm[v] of the result.
Hypergraph relabel(const Hypergraph& h, std::span<const int> perm);

/// Throws std::invalid_argument when n < 4.
FourProfile four_profile(const Hypergraph& h);

/// Number of hyperedges inside the 4-set {a,b,c,d}.
int induced_edge_count(const Hypergraph& h, int a, int b, int c, int d);

/// Distinct p,q,r,s with {p,q,r}, {p,q,s} in E and {p,r,s} not in E, the
/// first such ordered tuple in lexicographic order; empty if none exists.
/// Such a tuple exists exactly when some pair lies on two distinct lines.
std::optional<std::array<int, 4>> multi_line_witness(const Hypergraph& h);

}  // namespace linelab
