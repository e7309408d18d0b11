#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include "linelab/hypergraph.hpp"

namespace linelab {

inline constexpr int kMaxCanonicalVertices = 8;

/// Isomorphism-class key for hypergraphs on at most eight vertices.
///
/// `bits` is the edge mask of a canonical relabeling (bit r = triple of colex
/// rank r). Codes are ordered lexicographically as bit strings read from
/// rank 0 upward, and the canonical relabeling is the one whose bit string is
/// smallest among all relabelings that list vertices in the order of their
/// refined invariant classes (see canonical_labeling). Serialized as
/// "n:<hex>", the hex digits spelling that bit string four bits at a time.
struct CanonicalForm {
  int n = 0;
  std::uint64_t bits = 0;

  std::string str() const;
  /// Throws std::invalid_argument on malformed text.
  static CanonicalForm parse(std::string_view text);

  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
  friend std::strong_ordering operator<=>(const CanonicalForm& x, const CanonicalForm& y);
};

struct CanonicalFormHash {
  std::size_t operator()(const CanonicalForm& f) const noexcept {
    return std::hash<std::uint64_t>{}(f.bits * 0x9E3779B97F4A7C15ULL + static_cast<std::uint64_t>(f.n));
  }
};

/// Lexicographic comparison of two edge masks as bit strings from rank 0.
constexpr bool bitstring_less(std::uint64_t x, std::uint64_t y) noexcept {
  const std::uint64_t diff = x ^ y;
  if (diff == 0) return false;
  return ((x >> __builtin_ctzll(diff)) & 1U) == 0;
}

/// Full result of the canonical labeling search.
struct CanonicalLabeling {
  int n = 0;
  std::uint64_t bits = 0;
  /// position[v] is the canonical label of original vertex v.
  std::array<int, kMaxCanonicalVertices> position{};
  /// Vertices that some optimal labeling puts last: the automorphism orbit
  /// of the canonical last vertex.
  VertexSet last_orbit = 0;
  /// Number of optimal labelings found, i.e. |Aut(H)|.
  std::uint64_t automorphisms = 0;
};

/// Vertex colors from iterated refinement, starting from triple-degrees.
/// Color values are isomorphism-invariant and ordered canonically.
std::array<int, kMaxCanonicalVertices> refine_colors(int n, std::uint64_t mask);

/// Branch-and-bound over relabelings that respect the refined color order.
/// Requires n <= 8.
CanonicalLabeling canonical_labeling(int n, std::uint64_t mask);

/// Throws unsupported_size when n > 8.
CanonicalForm canonical_form(const Hypergraph& h);

/// The canonical representative itself.
Hypergraph decode(const CanonicalForm& f);

/// Edge mask after sending vertex v to perm[v]; n <= 8.
std::uint64_t permute_mask(int n, std::uint64_t mask, std::span<const int> perm);

}  // namespace linelab
