#include "linelab/families.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace linelab {
namespace {

std::vector<Triple> triples_inside(std::span<const int> block) {
  std::vector<Triple> out;
  for (std::size_t i = 0; i < block.size(); ++i)
    for (std::size_t j = i + 1; j < block.size(); ++j)
      for (std::size_t k = j + 1; k < block.size(); ++k) out.push_back(Triple::of(block[i], block[j], block[k]));
  return out;
}

std::vector<Triple> develop_cyclic(int modulus, std::initializer_list<std::array<int, 3>> base_blocks) {
  std::vector<Triple> out;
  for (const auto& b : base_blocks)
    for (int shift = 0; shift < modulus; ++shift)
      out.push_back(Triple::of((b[0] + shift) % modulus, (b[1] + shift) % modulus, (b[2] + shift) % modulus));
  return out;
}

// Bose construction for n = 6t + 3 over the idempotent commutative
// quasigroup x o y = (t + 1)(x + y) mod (2t + 1). Point (x, i) is x + m*i.
std::vector<Triple> bose_system(int n) {
  const int t = (n - 3) / 6;
  const int m = 2 * t + 1;
  auto point = [m](int x, int i) { return x + m * (i % 3); };
  auto op = [m, t](int x, int y) { return ((t + 1) * (x + y)) % m; };
  std::vector<Triple> out;
  for (int x = 0; x < m; ++x) out.push_back(Triple::of(point(x, 0), point(x, 1), point(x, 2)));
  for (int x = 0; x < m; ++x)
    for (int y = x + 1; y < m; ++y)
      for (int i = 0; i < 3; ++i) out.push_back(Triple::of(point(x, i), point(y, i), point(op(x, y), i + 1)));
  return out;
}

}  // namespace

std::string FamilyTag::str() const {
  switch (family) {
    case Family::NearPencil: return "NearPencil";
    case Family::ProjectivePlane: return "ProjectivePlane(" + std::to_string(k) + ")";
    case Family::SteinerComplement: return "SteinerComplement";
    case Family::None: break;
  }
  return "None";
}

Hypergraph make_near_pencil(int n) {
  if (n < 3) throw std::invalid_argument("near-pencil needs at least 3 vertices");
  std::vector<int> block(static_cast<std::size_t>(n - 1));
  for (int v = 0; v < n - 1; ++v) block[static_cast<std::size_t>(v)] = v;
  return Hypergraph(n, triples_inside(block));
}

Hypergraph make_projective_plane(int q) {
  if (q != 2 && q != 3) throw unsupported_size("projective planes are provided for q in {2,3}");
  std::vector<std::array<int, 3>> points;
  for (int y = 0; y < q; ++y)
    for (int z = 0; z < q; ++z) points.push_back({1, y, z});
  for (int z = 0; z < q; ++z) points.push_back({0, 1, z});
  points.push_back({0, 0, 1});
  const int n = static_cast<int>(points.size());
  std::vector<Triple> edges;
  // Lines are indexed by the same normalized vectors (duality).
  for (const auto& normal : points) {
    std::vector<int> on_line;
    for (int p = 0; p < n; ++p) {
      const auto& x = points[static_cast<std::size_t>(p)];
      if ((normal[0] * x[0] + normal[1] * x[1] + normal[2] * x[2]) % q == 0) on_line.push_back(p);
    }
    for (const Triple& t : triples_inside(on_line)) edges.push_back(t);
  }
  return Hypergraph(n, edges);
}

Hypergraph make_fano() { return make_projective_plane(2); }

std::vector<Triple> steiner_triple_system(int n) {
  switch (n) {
    case 3: return {Triple{0, 1, 2}};
    case 7: return develop_cyclic(7, {{0, 1, 3}});
    case 9:
      return {Triple{0, 1, 2}, Triple{3, 4, 5}, Triple{6, 7, 8}, Triple{0, 3, 6}, Triple{1, 4, 7}, Triple{2, 5, 8},
              Triple{0, 4, 8}, Triple{1, 5, 6}, Triple{2, 3, 7}, Triple{0, 5, 7}, Triple{1, 3, 8}, Triple{2, 4, 6}};
    case 13: return develop_cyclic(13, {{0, 1, 4}, {0, 2, 7}});
    case 15: return bose_system(15);
    default: break;
  }
  throw unsupported_size("Steiner triple systems are provided for n in {3,7,9,13,15}");
}

Hypergraph make_steiner_complement(int n) {
  const auto sts = steiner_triple_system(n);
  return Hypergraph(n, sts).complement();
}

std::vector<std::string> f0_vertex_names() {
  std::vector<std::string> names{"1", "2"};
  for (char x : {'a', 'b', 'c'})
    for (char y : {'d', 'e', 'f'}) names.push_back(std::string{'(', x, ',', y, ')'});
  return names;
}

std::vector<std::string> f1_vertex_names() {
  std::vector<std::string> names{"1", "2"};
  for (char x : {'a', 'b', 'c'})
    for (char y : {'d', 'e'}) names.push_back(std::string{'(', x, ',', y, ')'});
  return names;
}

std::vector<std::string> f23_vertex_names() { return {"a1", "b1", "a2", "b2", "a3", "b3"}; }

int vertex_index(std::span<const std::string> names, std::string_view name) {
  const auto it = std::find(names.begin(), names.end(), name);
  if (it == names.end()) throw std::invalid_argument("unknown vertex name '" + std::string(name) + "'");
  return static_cast<int>(it - names.begin());
}

namespace {

// Vertex 1 joins pairs agreeing in the first coordinate, vertex 2 pairs
// agreeing in the second; the grid itself is complete.
Hypergraph grid_example(int columns) {
  const int n = 2 + 3 * columns;
  auto cell = [columns](int x, int y) { return 2 + columns * x + y; };
  std::vector<int> grid;
  for (int v = 2; v < n; ++v) grid.push_back(v);
  std::vector<Triple> edges = triples_inside(grid);
  for (int x = 0; x < 3; ++x)
    for (int y = 0; y < columns; ++y)
      for (int x2 = 0; x2 < 3; ++x2)
        for (int y2 = 0; y2 < columns; ++y2) {
          const int r = cell(x, y);
          const int s = cell(x2, y2);
          if (r >= s) continue;
          if (x == x2) edges.push_back(Triple::of(0, r, s));
          if (y == y2) edges.push_back(Triple::of(1, r, s));
        }
  return Hypergraph(n, edges);
}

}  // namespace

Hypergraph make_F0() { return grid_example(3); }
Hypergraph make_F1() { return grid_example(2); }

VertexSet f1_inside_f0() {
  VertexSet w = 0b11;
  for (int x = 0; x < 3; ++x)
    for (int y = 0; y < 2; ++y) w |= VertexSet{1} << (2 + 3 * x + y);
  return w;
}

namespace {

Hypergraph six_point_example(bool remove_a_triple) {
  // a1, b1, a2, b2, a3, b3 = 0..5
  std::vector<Triple> removed{Triple::of(0, 3, 5), Triple::of(2, 1, 5), Triple::of(4, 1, 3)};
  if (remove_a_triple) removed.push_back(Triple::of(0, 2, 4));
  Hypergraph none(6, removed);
  return none.complement();
}

}  // namespace

Hypergraph make_F2() { return six_point_example(true); }
Hypergraph make_F3() { return six_point_example(false); }

Hypergraph make_layered(std::span<const int> sizes) {
  if (sizes.empty()) throw std::invalid_argument("layered construction needs at least one block");
  std::vector<int> block_of;
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    if (sizes[i] < 1) throw std::invalid_argument("layered block sizes must be positive");
    block_of.insert(block_of.end(), static_cast<std::size_t>(sizes[i]), static_cast<int>(i));
  }
  const int n = static_cast<int>(block_of.size());
  if (n > kMaxVertices) throw unsupported_size("layered construction exceeds 64 vertices");
  std::vector<Triple> edges;
  for (int c = 2; c < n; ++c)
    for (int b = 1; b < c; ++b)
      for (int a = 0; a < b; ++a) {
        // Blocks are consecutive, so a sorted triple is an edge iff its two
        // smallest vertices share a block that the largest lies beyond.
        const int ba = block_of[static_cast<std::size_t>(a)];
        const int bb = block_of[static_cast<std::size_t>(b)];
        const int bc = block_of[static_cast<std::size_t>(c)];
        if (ba == bb && bc > bb) edges.push_back(Triple{a, b, c});
      }
  return Hypergraph(n, edges);
}

// For n >= 4 the three families cannot overlap: a near-pencil has two-point
// lines next to a line of size n-1 >= 3; every line of a Steiner complement
// has n-1 points; a plane with n >= 4 has k >= 3 and all lines of size
// k < n-1. The check order therefore only matters at n = 3, where the
// edgeless hypergraph satisfies all three and is reported as NearPencil.
FamilyTag recognize_family(const Hypergraph& h) {
  const int n = h.order();
  if (n < 3) throw std::invalid_argument("recognize_family needs at least 3 vertices");

  const std::size_t pencil_edges = static_cast<std::size_t>(binomial(n - 1, 3));
  if (h.edge_count() == pencil_edges)
    for (int w = 0; w < n; ++w)
      if (h.degree(w) == 0) return FamilyTag{Family::NearPencil, 0};

  int k = 2;
  while (k * (k - 1) + 1 < n) ++k;
  if (k * (k - 1) + 1 == n) {
    const auto lines = all_lines(h);
    bool plane = std::all_of(lines.begin(), lines.end(), [k](VertexSet l) { return vertex_count(l) == k; });
    for (int v = 1; plane && v < n; ++v)
      for (int u = 0; plane && u < v; ++u) {
        const VertexSet pair = (VertexSet{1} << u) | (VertexSet{1} << v);
        const auto through = std::count_if(lines.begin(), lines.end(), [pair](VertexSet l) { return (l & pair) == pair; });
        plane = through == 1;
      }
    for (std::size_t i = 0; plane && i < lines.size(); ++i) {
      const auto pts = members(lines[i]);
      for (const Triple& t : triples_inside(pts))
        if (!h.has_edge(t)) {
          plane = false;
          break;
        }
    }
    if (plane) return FamilyTag{Family::ProjectivePlane, k};
  }

  bool steiner = true;
  for (int v = 1; steiner && v < n; ++v)
    for (int u = 0; steiner && u < v; ++u) {
      int missing = 0;
      for (int w = 0; w < n; ++w)
        if (w != u && w != v && !h.has_edge(u, v, w)) ++missing;
      steiner = missing == 1;
    }
  if (steiner) return FamilyTag{Family::SteinerComplement, 0};
  return FamilyTag{};
}

}  // namespace linelab
