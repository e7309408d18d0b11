#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "linelab/hypergraph.hpp"

namespace linelab {

enum class Family { None, NearPencil, ProjectivePlane, SteinerComplement };

struct FamilyTag {
  Family family = Family::None;
  /// Line size; set only for ProjectivePlane, where n = k(k-1)+1.
  int k = 0;

  std::string str() const;
  friend bool operator==(const FamilyTag&, const FamilyTag&) = default;
};

/// All triples avoiding vertex w = n-1. Requires n >= 3.
Hypergraph make_near_pencil(int n);

/// Triples inside the lines of PG(2,q) for q in {2,3}; points are the
/// one-dimensional subspaces of GF(q)^3 listed as (1,y,z), (0,1,z), (0,0,1).
Hypergraph make_projective_plane(int q);

/// The Fano hypergraph: seven vertices, the seven lines of PG(2,2) as edges.
Hypergraph make_fano();

/// A Steiner triple system on n points, n in {3,7,9,13,15}. 7 is the cyclic
/// Fano system, 9 the affine plane AG(2,3), 13 the cyclic system with base
/// blocks {0,1,4}, {0,2,7}, and 15 the Bose construction.
std::vector<Triple> steiner_triple_system(int n);

/// All triples except those of steiner_triple_system(n).
Hypergraph make_steiner_complement(int n);

// Named examples. Labelings:
//   F0: 0 = "1", 1 = "2", 2 + 3x + y = "(x,y)" for x in {a,b,c}, y in {d,e,f}
//   F1: 0 = "1", 1 = "2", 2 + 2x + y = "(x,y)" for x in {a,b,c}, y in {d,e}
//   F2, F3: a1, b1, a2, b2, a3, b3 = 0..5
Hypergraph make_F0();
Hypergraph make_F1();
Hypergraph make_F2();
Hypergraph make_F3();

std::vector<std::string> f0_vertex_names();
std::vector<std::string> f1_vertex_names();
std::vector<std::string> f23_vertex_names();
/// The vertices of F0 that induce F1: {1,2} and the (x,d), (x,e) columns.
VertexSet f1_inside_f0();

/// Index of `name` in `names`; throws std::invalid_argument if absent.
int vertex_index(std::span<const std::string> names, std::string_view name);

/// Consecutive blocks V_1..V_k of the given sizes; {u,v,w} is an edge iff
/// u, v lie in one block V_i and w in a later block V_j.
Hypergraph make_layered(std::span<const int> sizes);

/// Classifies the line system of h. Checks near-pencil, then projective
/// plane, then Steiner complement. Requires n >= 3.
FamilyTag recognize_family(const Hypergraph& h);

}  // namespace linelab
