#pragma once

// Deliberately naive implementations, kept independent of the optimized
// code paths so they can serve as cross-checks.

#include <cstdint>
#include <optional>
#include <vector>

#include "linelab/hypergraph.hpp"

namespace linelab::reference {

/// Minimum edge bit string over all n! relabelings (n <= 7).
std::uint64_t full_scan_minimum(int n, std::uint64_t mask);

/// Every labeled hypergraph on n <= 5 vertices reduced by full_scan_minimum,
/// one entry per class, in increasing numeric order.
std::vector<std::uint64_t> all_class_minima(int n);

/// Middles of the edges of h, listed in colex edge order.
using MiddleVector = std::vector<int>;

/// Direct test of the transitivity axiom on the ordered triples represented
/// by `middles`.
bool m3_holds(const Hypergraph& h, const MiddleVector& middles);

/// Every violation-free middle assignment, by scanning all 3^|E| choices,
/// in lexicographic order of the middle-slot index vector.
std::vector<MiddleVector> all_violation_free(const Hypergraph& h);
bool pseudometric_by_scan(const Hypergraph& h);

/// A vertex order with every triple's middle strictly between its ends, by
/// trying all n! orders of a complete hypergraph's assignment.
std::optional<std::vector<int>> linear_order_by_scan(const Hypergraph& h, const MiddleVector& middles);

/// Point sets of line(u,v) for all pairs, deduplicated, sorted.
std::vector<VertexSet> lines_by_scan(const Hypergraph& h);
/// True if some pair of vertices lies in two distinct lines.
bool pair_in_two_lines(const Hypergraph& h);
/// Edge counts of all 4-subsets.
std::vector<std::uint64_t> four_counts_by_scan(const Hypergraph& h);

}  // namespace linelab::reference
