#include <gtest/gtest.h>

#include "helpers.hpp"
#include "linelab/canonical.hpp"
#include "linelab/enumeration.hpp"
#include "linelab/families.hpp"
#include "linelab/hypergraph.hpp"
#include "linelab/reference.hpp"

using namespace linelab;
using namespace linelab::test_support;

TEST(TripleRank, ColexOrderRoundTrips) {
  std::size_t r = 0;
  for (int c = 2; c < 12; ++c)
    for (int b = 1; b < c; ++b)
      for (int a = 0; a < b; ++a, ++r) {
        EXPECT_EQ(triple_rank(Triple{a, b, c}), r);
        EXPECT_EQ(triple_unrank(r), (Triple{a, b, c}));
      }
}

TEST(TripleRank, OfSortsAndRejectsRepeats) {
  EXPECT_EQ(Triple::of(5, 1, 3), (Triple{1, 3, 5}));
  EXPECT_THROW(Triple::of(1, 1, 3), std::invalid_argument);
}

TEST(Hypergraph, RejectsOutOfRangeTriples) {
  EXPECT_THROW(Hypergraph(3, {Triple{0, 1, 3}}), std::invalid_argument);
  EXPECT_THROW(Hypergraph(-1), unsupported_size);
  EXPECT_THROW(Hypergraph(65), unsupported_size);
}

TEST(Hypergraph, BitsetMatchesUniverse) {
  const Hypergraph h = Hypergraph::complete(7);
  EXPECT_EQ(h.universe_size(), 35u);
  EXPECT_EQ(h.edge_count(), 35u);
  EXPECT_EQ(h.complement().edge_count(), 0u);
}

TEST(Line, F0PairOfTheTwoSpecialVertices) {
  const auto names = f0_vertex_names();
  const Hypergraph f0 = make_F0();
  EXPECT_EQ(line(f0, vertex_index(names, "1"), vertex_index(names, "2")).points, named(names, {"1", "2"}));
}

TEST(Line, F0VertexOneWithAGridCell) {
  const auto names = f0_vertex_names();
  const Hypergraph f0 = make_F0();
  EXPECT_EQ(line(f0, vertex_index(names, "1"), vertex_index(names, "(a,d)")).points,
            named(names, {"1", "(a,d)", "(a,e)", "(a,f)"}));
}

TEST(Line, EdgelessGivesThePair) {
  const Hypergraph h(6);
  for (int u = 0; u < 6; ++u)
    for (int v = 0; v < 6; ++v)
      if (u != v) EXPECT_EQ(line(h, u, v).points, (VertexSet{1} << u) | (VertexSet{1} << v));
}

TEST(Line, RejectsBadPairs) {
  const Hypergraph h(4);
  EXPECT_THROW(line(h, 1, 1), std::invalid_argument);
  EXPECT_THROW(line(h, 1, 4), std::invalid_argument);
}

TEST(Line, ContainsPairAndIsSymmetric) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 9);
    const Hypergraph h = random_hypergraph(rng, n, 0.4);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) {
        const Line l = line(h, u, v);
        EXPECT_TRUE((l.points >> u) & 1U);
        EXPECT_TRUE((l.points >> v) & 1U);
        EXPECT_EQ(l.points, line(h, v, u).points);
      }
  }
}

TEST(AllLines, F0HasTenLines) { EXPECT_EQ(all_lines(make_F0()).size(), 10u); }

TEST(AllLines, CompleteHasTheSingleLineV) {
  for (int n = 3; n <= 9; ++n) {
    const auto lines = all_lines(Hypergraph::complete(n));
    ASSERT_EQ(lines.size(), 1u);
    EXPECT_EQ(lines[0], all_vertices(n));
  }
}

TEST(AllLines, NearPencilOnFiveMatchesScan) {
  const Hypergraph h = make_near_pencil(5);
  EXPECT_EQ(all_lines(h), reference::lines_by_scan(h));
  EXPECT_EQ(all_lines(h).size(), 5u);
}

TEST(AllLines, AgreesWithScanOnRandomInputs) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const Hypergraph h = random_hypergraph(rng, 2 + static_cast<int>(rng() % 10), 0.3);
    EXPECT_EQ(all_lines(h), reference::lines_by_scan(h));
  }
}

TEST(AllLines, NeedsTwoVertices) {
  EXPECT_THROW(all_lines(Hypergraph(1)), std::invalid_argument);
  EXPECT_THROW(has_dbe_property(Hypergraph(0)), std::invalid_argument);
}

TEST(Dbe, Examples) {
  EXPECT_FALSE(has_dbe_property(make_F0()));
  for (int n = 3; n <= 8; ++n) EXPECT_TRUE(has_dbe_property(Hypergraph::complete(n)));
  const Hypergraph fano = make_fano();
  const auto lines = all_lines(fano);
  EXPECT_EQ(lines.size(), 7u);
  for (const Triple& e : fano.edges()) EXPECT_NE(std::find(lines.begin(), lines.end(), e.vertex_set()), lines.end());
  EXPECT_TRUE(has_dbe_property(fano));
}

TEST(Induced, WholeVertexSetIsIdentity) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    const Hypergraph h = random_hypergraph(rng, 1 + static_cast<int>(rng() % 10));
    EXPECT_EQ(induced(h, all_vertices(h.order())), h);
  }
}

TEST(Induced, F0ContainsF1) {
  const auto names = f0_vertex_names();
  const VertexSet w = named(names, {"1", "2", "(a,d)", "(a,e)", "(b,d)", "(b,e)", "(c,d)", "(c,e)"});
  EXPECT_EQ(w, f1_inside_f0());
  EXPECT_EQ(induced(make_F0(), w), make_F1());
}

TEST(Induced, KeepsExactlyTheInsideEdges) {
  const Hypergraph h(5, {Triple{0, 1, 2}, Triple{1, 3, 4}, Triple{0, 2, 4}});
  const Hypergraph sub = induced(h, 0b10111);  // {0,1,2,4} -> 0,1,2,3
  EXPECT_EQ(sub, Hypergraph(4, {Triple{0, 1, 2}, Triple{0, 2, 3}}));
}

TEST(Induced, CommutesWithRelabeling) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 6);
    const Hypergraph h = random_hypergraph(rng, n);
    const auto perm = random_permutation(rng, n);
    const VertexSet w = rng() & all_vertices(n);
    VertexSet image = 0;
    for (int v = 0; v < n; ++v)
      if ((w >> v) & 1U) image |= VertexSet{1} << perm[static_cast<std::size_t>(v)];
    EXPECT_EQ(canonical_form(induced(relabel(h, perm), image)), canonical_form(induced(h, w)));
  }
}

TEST(FourProfile, Examples) {
  EXPECT_EQ(four_profile(Hypergraph::complete(4)).counts, (std::array<std::uint64_t, 5>{0, 0, 0, 0, 1}));
  EXPECT_EQ(four_profile(Hypergraph(5)).counts, (std::array<std::uint64_t, 5>{5, 0, 0, 0, 0}));
  const Hypergraph f2 = make_F2();
  const auto scan = reference::four_counts_by_scan(f2);
  EXPECT_EQ(four_profile(f2).counts[2], scan[2]);
  EXPECT_THROW(four_profile(Hypergraph(3)), std::invalid_argument);
}

TEST(FourProfile, SumsToChooseFourAndMatchesScan) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 4 + static_cast<int>(rng() % 7);
    const Hypergraph h = random_hypergraph(rng, n);
    const FourProfile p = four_profile(h);
    EXPECT_EQ(p.total(), binomial(n, 4));
    const auto scan = reference::four_counts_by_scan(h);
    for (int i = 0; i <= 4; ++i) EXPECT_EQ(p.counts[static_cast<std::size_t>(i)], scan[static_cast<std::size_t>(i)]);
  }
}

TEST(MultiLineWitness, Examples) {
  EXPECT_FALSE(multi_line_witness(make_fano()).has_value());
  EXPECT_FALSE(multi_line_witness(Hypergraph(5)).has_value());
  const Hypergraph two(4, {Triple{0, 1, 2}, Triple{0, 1, 3}});
  const auto w = multi_line_witness(two);
  ASSERT_TRUE(w.has_value());
  const auto [p, q, r, s] = *w;
  EXPECT_TRUE(two.has_edge(p, q, r));
  EXPECT_TRUE(two.has_edge(p, q, s));
  EXPECT_FALSE(two.has_edge(p, r, s));
  EXPECT_TRUE(multi_line_witness(make_F0()).has_value());
  EXPECT_TRUE(reference::pair_in_two_lines(make_F0()));
}

// Exhaustive over all classes on up to six vertices.
TEST(MultiLineWitness, EquivalentToPairInTwoLines) {
  for (int n = 2; n <= 6; ++n)
    for (const auto& f : enumerate_canonical(n)) {
      const Hypergraph h = decode(f);
      EXPECT_EQ(multi_line_witness(h).has_value(), reference::pair_in_two_lines(h)) << f.str();
    }
}

TEST(FourProfile, NoTwoOrThreeIffEveryPairInOneLine) {
  for (int n = 4; n <= 6; ++n)
    for (const auto& f : enumerate_canonical(n)) {
      const Hypergraph h = decode(f);
      const FourProfile p = four_profile(h);
      EXPECT_EQ(p.counts[2] == 0 && p.counts[3] == 0, !reference::pair_in_two_lines(h)) << f.str();
    }
}

TEST(Relabel, RejectsNonPermutations) {
  const Hypergraph h(3, {Triple{0, 1, 2}});
  const std::vector<int> bad{0, 0, 1};
  EXPECT_THROW(relabel(h, bad), std::invalid_argument);
}
