#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "linelab/families.hpp"
#include "linelab/hypergraph.hpp"

namespace linelab::test_support {

inline Hypergraph random_hypergraph(std::mt19937_64& rng, int n, double density = 0.5) {
  std::bernoulli_distribution coin(density);
  std::vector<Triple> edges;
  for (int c = 2; c < n; ++c)
    for (int b = 1; b < c; ++b)
      for (int a = 0; a < b; ++a)
        if (coin(rng)) edges.push_back(Triple{a, b, c});
  return Hypergraph(n, edges);
}

inline std::vector<int> random_permutation(std::mt19937_64& rng, int n) {
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

inline VertexSet named(const std::vector<std::string>& names, std::initializer_list<std::string_view> members) {
  VertexSet s = 0;
  for (auto m : members) s |= VertexSet{1} << vertex_index(names, m);
  return s;
}

inline VertexSet without(int n, int v) { return all_vertices(n) & ~(VertexSet{1} << v); }

}  // namespace linelab::test_support
