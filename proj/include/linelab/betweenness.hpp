#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "linelab/hypergraph.hpp"

namespace linelab {

/// A ternary betweenness stored as a middle assignment: each assigned triple
/// {x,m,y} with middle m stands for (x,m,y) and (y,m,x). M0 and M1 hold by
/// construction and M2 because a triple has at most one middle, so M3 is the
/// only axiom left to check.
class Betweenness {
 public:
  explicit Betweenness(int n = 0) : n_(n) {}
  /// Throws std::invalid_argument if a middle is not a vertex of its triple
  /// or a triple is assigned twice.
  Betweenness(int n, const std::vector<std::pair<Triple, int>>& middles);

  int order() const noexcept { return n_; }
  std::size_t size() const noexcept { return middle_.size(); }
  std::optional<int> middle(const Triple& t) const;
  /// (x,m,y) belongs to the relation.
  bool contains(int x, int m, int y) const;

  /// Assignments in colex order of their triples.
  std::vector<std::pair<Triple, int>> entries() const;

  /// Every hyperedge of h is assigned, and nothing else.
  bool covers_exactly(const Hypergraph& h) const;

  friend bool operator==(const Betweenness&, const Betweenness&) = default;

 private:
  int n_;
  std::map<std::size_t, int> middle_;  // keyed by triple_rank
};

/// (u,v,w), (u,w,x) are in B but a consequent (u,v,x) or (v,w,x) is not.
struct M3Violation {
  std::array<int, 4> tuple{};  // u, v, w, x
  bool missing_uvx = false;
  bool missing_vwx = false;
};

/// All M3 violations, ordered lexicographically by (u,v,w,x).
/// Throws std::invalid_argument unless b assigns exactly the edges of h.
std::vector<M3Violation> check_m3(const Betweenness& b, const Hypergraph& h);

struct PseudometricSearch {
  std::optional<Betweenness> betweenness;
  /// When no betweenness exists: the contradictions met, in search order.
  std::vector<std::string> refutation;
  std::uint64_t nodes = 0;
};

/// Backtracking over middles with propagation on 4-vertex subsets.
PseudometricSearch search_pseudometric(const Hypergraph& h);
std::optional<Betweenness> find_pseudometric(const Hypergraph& h);
inline bool is_pseudometric(const Hypergraph& h) { return find_pseudometric(h).has_value(); }

/// Calls visit on every violation-free complete middle assignment, in
/// lexicographic order of the vector of middles indexed by edge rank.
/// Stops early when visit returns false. Returns the number visited.
std::uint64_t enumerate_pseudometric(const Hypergraph& h, const std::function<bool(const Betweenness&)>& visit);
std::vector<Betweenness> all_pseudometric(const Hypergraph& h);

/// For a violation-free b on the complete hypergraph with n >= 5, an
/// ordering v_0..v_{n-1} with middle(v_i,v_j,v_k) = v_j whenever i < j < k.
/// Throws unsupported_size for n = 4 (where a cyclic betweenness exists) and
/// std::invalid_argument for other violated preconditions.
std::optional<std::vector<int>> linear_order_from_complete(const Betweenness& b, const Hypergraph& h);

/// Betweenness of points placed on a line at the given distinct positions,
/// restricted to h's edges.
Betweenness collinear_betweenness(const Hypergraph& h, const std::vector<std::int64_t>& positions);

}  // namespace linelab
