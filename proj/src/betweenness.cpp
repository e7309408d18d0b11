#include "linelab/betweenness.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <stdexcept>

namespace linelab {

Betweenness::Betweenness(int n, const std::vector<std::pair<Triple, int>>& middles) : n_(n) {
  for (const auto& [t, m] : middles) {
    const Triple s = Triple::of(t.a, t.b, t.c);
    if (s.a < 0 || s.c >= n) throw std::invalid_argument("betweenness triple out of range");
    if (!s.contains(m)) throw std::invalid_argument("middle must be a vertex of its triple");
    if (!middle_.emplace(triple_rank(s), m).second) throw std::invalid_argument("triple assigned twice");
  }
}

std::optional<int> Betweenness::middle(const Triple& t) const {
  const auto it = middle_.find(triple_rank(Triple::of(t.a, t.b, t.c)));
  if (it == middle_.end()) return std::nullopt;
  return it->second;
}

bool Betweenness::contains(int x, int m, int y) const {
  if (x == m || m == y || x == y) return false;
  const auto it = middle_.find(triple_rank(Triple::of(x, m, y)));
  return it != middle_.end() && it->second == m;
}

std::vector<std::pair<Triple, int>> Betweenness::entries() const {
  std::vector<std::pair<Triple, int>> out;
  out.reserve(middle_.size());
  for (const auto& [rank, m] : middle_) out.emplace_back(triple_unrank(rank), m);
  return out;
}

bool Betweenness::covers_exactly(const Hypergraph& h) const {
  if (h.order() != n_ || middle_.size() != h.edge_count()) return false;
  return std::all_of(middle_.begin(), middle_.end(), [&](const auto& kv) { return h.has_rank(kv.first); });
}

std::vector<M3Violation> check_m3(const Betweenness& b, const Hypergraph& h) {
  if (!b.covers_exactly(h)) throw std::invalid_argument("check_m3: betweenness must assign exactly the hyperedges");
  const int n = h.order();
  std::vector<M3Violation> out;
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      for (int w = 0; w < n; ++w) {
        if (!b.contains(u, v, w)) continue;
        for (int x = 0; x < n; ++x) {
          if (x == u || x == v || x == w || !b.contains(u, w, x)) continue;
          const bool uvx = b.contains(u, v, x);
          const bool vwx = b.contains(v, w, x);
          if (!uvx || !vwx) out.push_back(M3Violation{{u, v, w, x}, !uvx, !vwx});
        }
      }
  std::sort(out.begin(), out.end(), [](const M3Violation& p, const M3Violation& q) { return p.tuple < q.tuple; });
  return out;
}

namespace {

// Local picture of a 4-vertex subset {0,1,2,3}: its triples in colex order
// are {0,1,2}, {0,1,3}, {0,2,3}, {1,2,3}. Each triple is in state 0 (not a
// hyperedge) or 1 + s, where s indexes its middle within the sorted triple.
// Since M3 only ever mentions four distinct points, a middle assignment is
// violation-free iff every 4-subset is in an allowed joint state.
constexpr std::array<std::array<int, 3>, 4> kLocalTriples{{{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}}};

struct LocalTable {
  std::array<bool, 256> allowed{};
  LocalTable() {
    for (int code = 0; code < 256; ++code) {
      std::array<int, 4> state{};
      for (int k = 0; k < 4; ++k) state[static_cast<std::size_t>(k)] = (code >> (2 * k)) & 3;
      auto between = [&](int x, int m, int y) {
        for (int k = 0; k < 4; ++k) {
          const auto& t = kLocalTriples[static_cast<std::size_t>(k)];
          const int s = state[static_cast<std::size_t>(k)];
          if (s == 0) continue;
          const int mid = t[static_cast<std::size_t>(s - 1)];
          if (mid != m) continue;
          const bool ends = (t[0] == x || t[1] == x || t[2] == x) && (t[0] == y || t[1] == y || t[2] == y);
          if (ends && x != y && x != m && y != m) return true;
        }
        return false;
      };
      bool ok = true;
      for (int u = 0; u < 4 && ok; ++u)
        for (int v = 0; v < 4 && ok; ++v)
          for (int w = 0; w < 4 && ok; ++w)
            for (int x = 0; x < 4 && ok; ++x) {
              if (u == v || u == w || u == x || v == w || v == x || w == x) continue;
              if (between(u, v, w) && between(u, w, x) && !(between(u, v, x) && between(v, w, x))) ok = false;
            }
      allowed[static_cast<std::size_t>(code)] = ok;
    }
  }
};

const LocalTable& local_table() {
  static const LocalTable table;
  return table;
}

struct Quad {
  std::array<int, 4> vertices{};
  std::array<int, 4> edge{};  // edge index per local triple, -1 if absent
};

using Domains = std::vector<std::uint8_t>;  // bit s: slot s may be the middle

class MiddleSolver {
 public:
  explicit MiddleSolver(const Hypergraph& h) : h_(h), edges_(h.edges()) {
    const int n = h.order();
    std::vector<int> index_of(h.universe_size(), -1);
    for (std::size_t i = 0; i < edges_.size(); ++i) index_of[triple_rank(edges_[i])] = static_cast<int>(i);
    quads_of_edge_.resize(edges_.size());
    for (int d = 3; d < n; ++d)
      for (int c = 2; c < d; ++c)
        for (int b = 1; b < c; ++b)
          for (int a = 0; a < b; ++a) {
            Quad q{{a, b, c, d}, {}};
            int present = 0;
            for (std::size_t k = 0; k < 4; ++k) {
              const auto& t = kLocalTriples[k];
              const Triple g{q.vertices[static_cast<std::size_t>(t[0])], q.vertices[static_cast<std::size_t>(t[1])],
                             q.vertices[static_cast<std::size_t>(t[2])]};
              q.edge[k] = index_of[triple_rank(g)];
              if (q.edge[k] >= 0) ++present;
            }
            if (present < 2) continue;
            const int id = static_cast<int>(quads_.size());
            quads_.push_back(q);
            for (int e : q.edge)
              if (e >= 0) quads_of_edge_[static_cast<std::size_t>(e)].push_back(id);
          }
  }

  const std::vector<Triple>& edges() const { return edges_; }

  // Arc consistency over all quads touching `seeds` (all quads if empty).
  // Returns false on a wipeout and records the offending quad and edge.
  bool propagate(Domains& dom, const std::vector<int>& seeds) {
    std::deque<int> queue;
    std::vector<char> queued(quads_.size(), 0);
    auto push = [&](int q) {
      if (!queued[static_cast<std::size_t>(q)]) {
        queued[static_cast<std::size_t>(q)] = 1;
        queue.push_back(q);
      }
    };
    if (seeds.empty()) {
      for (int q = 0; q < static_cast<int>(quads_.size()); ++q) push(q);
    } else {
      for (int e : seeds)
        for (int q : quads_of_edge_[static_cast<std::size_t>(e)]) push(q);
    }
    const auto& allowed = local_table().allowed;
    while (!queue.empty()) {
      const int qi = queue.front();
      queue.pop_front();
      queued[static_cast<std::size_t>(qi)] = 0;
      const Quad& q = quads_[static_cast<std::size_t>(qi)];
      std::array<std::uint8_t, 4> options{};
      for (std::size_t k = 0; k < 4; ++k)
        options[k] = q.edge[k] < 0 ? std::uint8_t{1} : static_cast<std::uint8_t>(dom[static_cast<std::size_t>(q.edge[k])] << 1);
      std::array<std::uint8_t, 4> support{};
      for (int s0 = 0; s0 < 4; ++s0) {
        if (!((options[0] >> s0) & 1U)) continue;
        for (int s1 = 0; s1 < 4; ++s1) {
          if (!((options[1] >> s1) & 1U)) continue;
          for (int s2 = 0; s2 < 4; ++s2) {
            if (!((options[2] >> s2) & 1U)) continue;
            for (int s3 = 0; s3 < 4; ++s3) {
              if (!((options[3] >> s3) & 1U)) continue;
              if (!allowed[static_cast<std::size_t>(s0 | (s1 << 2) | (s2 << 4) | (s3 << 6))]) continue;
              support[0] |= static_cast<std::uint8_t>(1U << s0);
              support[1] |= static_cast<std::uint8_t>(1U << s1);
              support[2] |= static_cast<std::uint8_t>(1U << s2);
              support[3] |= static_cast<std::uint8_t>(1U << s3);
            }
          }
        }
      }
      for (std::size_t k = 0; k < 4; ++k) {
        const int e = q.edge[k];
        if (e < 0) continue;
        auto& d = dom[static_cast<std::size_t>(e)];
        const auto narrowed = static_cast<std::uint8_t>(d & (support[k] >> 1));
        if (narrowed == d) continue;
        d = narrowed;
        if (d == 0) {
          conflict_quad_ = qi;
          conflict_edge_ = e;
          return false;
        }
        for (int other : quads_of_edge_[static_cast<std::size_t>(e)])
          if (other != qi) push(other);
      }
    }
    return true;
  }

  std::string describe_conflict() const {
    const Quad& q = quads_[static_cast<std::size_t>(conflict_quad_)];
    const Triple& t = edges_[static_cast<std::size_t>(conflict_edge_)];
    std::string s = "4-set {" + std::to_string(q.vertices[0]) + "," + std::to_string(q.vertices[1]) + "," +
                    std::to_string(q.vertices[2]) + "," + std::to_string(q.vertices[3]) + "} leaves edge " +
                    format_vertex_set(t.vertex_set()) + " without a middle";
    return s;
  }

  Betweenness to_betweenness(const Domains& dom) const {
    std::vector<std::pair<Triple, int>> middles;
    middles.reserve(edges_.size());
    for (std::size_t i = 0; i < edges_.size(); ++i) {
      const int slot = __builtin_ctz(dom[i]);
      const Triple& t = edges_[i];
      middles.emplace_back(t, slot == 0 ? t.a : slot == 1 ? t.b : t.c);
    }
    return Betweenness(h_.order(), middles);
  }

 private:
  const Hypergraph& h_;
  std::vector<Triple> edges_;
  std::vector<Quad> quads_;
  std::vector<std::vector<int>> quads_of_edge_;
  int conflict_quad_ = -1;
  int conflict_edge_ = -1;
};

class Backtracker {
 public:
  Backtracker(MiddleSolver& solver, std::vector<int> branch_order, bool record_trace)
      : solver_(solver), order_(std::move(branch_order)), record_(record_trace) {}

  // Visits solutions in the order induced by order_ and ascending middles.
  void run(const std::function<bool(const Domains&)>& visit) {
    Domains dom(solver_.edges().size(), 0b111);
    if (!solver_.propagate(dom, {})) {
      note_conflict();
      return;
    }
    descend(dom, visit);
  }

  std::uint64_t nodes() const { return nodes_; }
  std::vector<std::string> take_trace() { return std::move(trace_); }

 private:
  bool descend(Domains& dom, const std::function<bool(const Domains&)>& visit) {
    ++nodes_;
    int branch = -1;
    for (int e : order_)
      if (__builtin_popcount(dom[static_cast<std::size_t>(e)]) > 1) {
        branch = e;
        break;
      }
    if (branch < 0) return visit(dom);
    const std::uint8_t options = dom[static_cast<std::size_t>(branch)];
    for (int slot = 0; slot < 3; ++slot) {
      if (!((options >> slot) & 1U)) continue;
      Domains child = dom;
      child[static_cast<std::size_t>(branch)] = static_cast<std::uint8_t>(1U << slot);
      path_.emplace_back(branch, slot);
      if (solver_.propagate(child, {branch})) {
        if (!descend(child, visit)) {
          path_.pop_back();
          return false;
        }
      } else {
        note_conflict();
      }
      path_.pop_back();
    }
    return true;
  }

  void note_conflict() {
    if (!record_ || trace_.size() >= kMaxTrace) return;
    std::string s;
    for (const auto& [e, slot] : path_) {
      const Triple& t = solver_.edges()[static_cast<std::size_t>(e)];
      const int m = slot == 0 ? t.a : slot == 1 ? t.b : t.c;
      s += format_vertex_set(t.vertex_set()) + "->" + std::to_string(m) + " ";
    }
    if (path_.empty()) s = "propagation alone: ";
    else s += ": ";
    trace_.push_back(s + solver_.describe_conflict());
  }

  static constexpr std::size_t kMaxTrace = 64;
  MiddleSolver& solver_;
  std::vector<int> order_;
  bool record_;
  std::vector<std::pair<int, int>> path_;
  std::vector<std::string> trace_;
  std::uint64_t nodes_ = 0;
};

}  // namespace

PseudometricSearch search_pseudometric(const Hypergraph& h) {
  MiddleSolver solver(h);
  const auto& edges = solver.edges();
  std::vector<int> degree(static_cast<std::size_t>(h.order()), 0);
  for (const Triple& t : edges) {
    ++degree[static_cast<std::size_t>(t.a)];
    ++degree[static_cast<std::size_t>(t.b)];
    ++degree[static_cast<std::size_t>(t.c)];
  }
  std::vector<int> order(edges.size());
  std::iota(order.begin(), order.end(), 0);
  auto weight = [&](int e) {
    const Triple& t = edges[static_cast<std::size_t>(e)];
    return degree[static_cast<std::size_t>(t.a)] + degree[static_cast<std::size_t>(t.b)] + degree[static_cast<std::size_t>(t.c)];
  };
  std::stable_sort(order.begin(), order.end(), [&](int x, int y) { return weight(x) > weight(y); });

  PseudometricSearch result;
  Backtracker bt(solver, order, true);
  bt.run([&](const Domains& dom) {
    result.betweenness = solver.to_betweenness(dom);
    return false;
  });
  result.nodes = bt.nodes();
  if (!result.betweenness) result.refutation = bt.take_trace();
  return result;
}

std::optional<Betweenness> find_pseudometric(const Hypergraph& h) { return search_pseudometric(h).betweenness; }

std::uint64_t enumerate_pseudometric(const Hypergraph& h, const std::function<bool(const Betweenness&)>& visit) {
  MiddleSolver solver(h);
  std::vector<int> order(solver.edges().size());
  std::iota(order.begin(), order.end(), 0);
  std::uint64_t count = 0;
  Backtracker bt(solver, order, false);
  bt.run([&](const Domains& dom) {
    ++count;
    return visit(solver.to_betweenness(dom));
  });
  return count;
}

std::vector<Betweenness> all_pseudometric(const Hypergraph& h) {
  std::vector<Betweenness> out;
  enumerate_pseudometric(h, [&](const Betweenness& b) {
    out.push_back(b);
    return true;
  });
  return out;
}

std::optional<std::vector<int>> linear_order_from_complete(const Betweenness& b, const Hypergraph& h) {
  const int n = h.order();
  if (n == 4) throw unsupported_size("linear orders are not guaranteed on four points");
  if (n < 5) throw std::invalid_argument("linear_order_from_complete needs at least five vertices");
  if (h.edge_count() != h.universe_size()) throw std::invalid_argument("hypergraph must be complete");
  if (!check_m3(b, h).empty()) throw std::invalid_argument("betweenness violates M3");

  // An end of the order is never a middle; everything else is ranked by how
  // many vertices lie between it and that end.
  int end = -1;
  for (int v = 0; v < n && end < 0; ++v) {
    bool middle_somewhere = false;
    for (const auto& [t, m] : b.entries())
      if (m == v) {
        middle_somewhere = true;
        break;
      }
    if (!middle_somewhere) end = v;
  }
  if (end < 0) return std::nullopt;
  std::vector<int> order(static_cast<std::size_t>(n), -1);
  order[0] = end;
  for (int v = 0; v < n; ++v) {
    if (v == end) continue;
    int between = 0;
    for (int w = 0; w < n; ++w)
      if (w != v && w != end && b.contains(end, w, v)) ++between;
    auto& slot = order[static_cast<std::size_t>(between + 1)];
    if (slot != -1) return std::nullopt;
    slot = v;
  }
  for (int k = 2; k < n; ++k)
    for (int j = 1; j < k; ++j)
      for (int i = 0; i < j; ++i)
        if (!b.contains(order[static_cast<std::size_t>(i)], order[static_cast<std::size_t>(j)],
                        order[static_cast<std::size_t>(k)]))
          return std::nullopt;
  return order;
}

Betweenness collinear_betweenness(const Hypergraph& h, const std::vector<std::int64_t>& positions) {
  if (static_cast<int>(positions.size()) != h.order()) throw std::invalid_argument("one position per vertex required");
  std::vector<std::pair<Triple, int>> middles;
  for (const Triple& t : h.edges()) {
    std::array<int, 3> v{t.a, t.b, t.c};
    std::sort(v.begin(), v.end(), [&](int x, int y) { return positions[static_cast<std::size_t>(x)] < positions[static_cast<std::size_t>(y)]; });
    if (positions[static_cast<std::size_t>(v[0])] == positions[static_cast<std::size_t>(v[1])] ||
        positions[static_cast<std::size_t>(v[1])] == positions[static_cast<std::size_t>(v[2])])
      throw std::invalid_argument("positions must be distinct");
    middles.emplace_back(t, v[1]);
  }
  return Betweenness(h.order(), middles);
}

}  // namespace linelab
