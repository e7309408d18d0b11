#include <gtest/gtest.h>

#include <set>

#include "helpers.hpp"
#include "linelab/betweenness.hpp"
#include "linelab/enumeration.hpp"
#include "linelab/families.hpp"
#include "linelab/metric.hpp"
#include "linelab/reference.hpp"

using namespace linelab;
using namespace linelab::test_support;

namespace {

// Middles of abc, abd, acd, bcd on vertices a..d = 0..3.
Betweenness on_k4(int abc, int abd, int acd, int bcd) {
  return Betweenness(4, {{Triple{0, 1, 2}, abc}, {Triple{0, 1, 3}, abd}, {Triple{0, 2, 3}, acd}, {Triple{1, 2, 3}, bcd}});
}

reference::MiddleVector middles_of(const Betweenness& b) {
  reference::MiddleVector out;
  for (const auto& [t, m] : b.entries()) out.push_back(m);
  return out;
}

bool order_respects(const Betweenness& b, const std::vector<int>& order) {
  const int n = static_cast<int>(order.size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        const auto m = b.middle(Triple::of(order[static_cast<std::size_t>(i)], order[static_cast<std::size_t>(j)],
                                           order[static_cast<std::size_t>(k)]));
        if (m != order[static_cast<std::size_t>(j)]) return false;
      }
  return true;
}

// Smallest middle vector over all relabelings of a K4 assignment.
reference::MiddleVector k4_class(const Betweenness& b) {
  std::vector<int> perm{0, 1, 2, 3};
  reference::MiddleVector best;
  do {
    std::vector<std::pair<Triple, int>> moved;
    for (const auto& [t, m] : b.entries())
      moved.emplace_back(Triple::of(perm[static_cast<std::size_t>(t.a)], perm[static_cast<std::size_t>(t.b)],
                                    perm[static_cast<std::size_t>(t.c)]),
                         perm[static_cast<std::size_t>(m)]);
    const auto v = middles_of(Betweenness(4, moved));
    if (best.empty() || v < best) best = v;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

}  // namespace

TEST(CheckM3, LinearAssignmentOnFourPoints) {
  EXPECT_TRUE(check_m3(on_k4(1, 1, 2, 2), Hypergraph::complete(4)).empty());
}

TEST(CheckM3, CyclicAssignmentOnFourPoints) {
  // (a,b,c), (b,c,d), (c,d,a), (d,a,b)
  EXPECT_TRUE(check_m3(on_k4(1, 0, 3, 2), Hypergraph::complete(4)).empty());
}

TEST(CheckM3, DetectsViolation) {
  const Betweenness b = on_k4(1, 1, 2, 1);
  const auto v = check_m3(b, Hypergraph::complete(4));
  EXPECT_FALSE(v.empty());
  EXPECT_FALSE(reference::m3_holds(Hypergraph::complete(4), middles_of(b)));
  for (const auto& x : v) EXPECT_TRUE(x.missing_uvx || x.missing_vwx);
}

TEST(CheckM3, RejectsIncompleteOrForeignAssignments) {
  const Hypergraph h(4, {Triple{0, 1, 2}});
  EXPECT_THROW(check_m3(Betweenness(4), h), std::invalid_argument);
  EXPECT_THROW(check_m3(Betweenness(4, {{Triple{0, 1, 2}, 1}, {Triple{0, 1, 3}, 1}}), h), std::invalid_argument);
  EXPECT_THROW(Betweenness(4, {{Triple{0, 1, 2}, 3}}), std::invalid_argument);
}

TEST(CheckM3, AgreesWithDirectScan) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 4 + static_cast<int>(rng() % 3);
    const Hypergraph h = random_hypergraph(rng, n, 0.6);
    std::vector<std::pair<Triple, int>> assignment;
    for (const Triple& t : h.edges()) {
      const int pick = static_cast<int>(rng() % 3);
      assignment.emplace_back(t, pick == 0 ? t.a : pick == 1 ? t.b : t.c);
    }
    const Betweenness b(n, assignment);
    EXPECT_EQ(check_m3(b, h).empty(), reference::m3_holds(h, middles_of(b)));
  }
}

TEST(FindPseudometric, Examples) {
  const auto fano = find_pseudometric(make_fano());
  ASSERT_TRUE(fano.has_value());
  EXPECT_TRUE(check_m3(*fano, make_fano()).empty());
  EXPECT_FALSE(is_pseudometric(make_F1()));
  EXPECT_FALSE(is_pseudometric(make_F2()));
  EXPECT_FALSE(is_pseudometric(make_F3()));
  EXPECT_FALSE(search_pseudometric(make_F2()).refutation.empty());
}

TEST(FindPseudometric, SoundOnRandomInputs) {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 200; ++trial) {
    const Hypergraph h = random_hypergraph(rng, 3 + static_cast<int>(rng() % 7), 0.5);
    if (const auto b = find_pseudometric(h)) {
      EXPECT_TRUE(b->covers_exactly(h));
      EXPECT_TRUE(check_m3(*b, h).empty());
    }
  }
}

TEST(FindPseudometric, AgreesWithExhaustiveScanUpToFiveVertices) {
  for (int n = 1; n <= 5; ++n)
    for (const auto& f : enumerate_canonical(n)) {
      const Hypergraph h = decode(f);
      EXPECT_EQ(is_pseudometric(h), reference::pseudometric_by_scan(h)) << f.str();
    }
}

TEST(EnumeratePseudometric, EdgelessHasOneEmptyAssignment) {
  const auto all = all_pseudometric(Hypergraph(5));
  ASSERT_EQ(all.size(), 1u);
  EXPECT_EQ(all[0].size(), 0u);
}

TEST(EnumeratePseudometric, FourPointsMatchesScan) {
  const Hypergraph k4 = Hypergraph::complete(4);
  const auto all = all_pseudometric(k4);
  const auto scan = reference::all_violation_free(k4);
  ASSERT_EQ(all.size(), scan.size());
  for (std::size_t i = 0; i < all.size(); ++i) EXPECT_EQ(middles_of(all[i]), scan[i]);
}

TEST(EnumeratePseudometric, FourPointsHasLinearAndCyclicClassesOnly) {
  const Hypergraph k4 = Hypergraph::complete(4);
  std::set<reference::MiddleVector> classes;
  int linear = 0;
  for (const auto& b : all_pseudometric(k4)) {
    classes.insert(k4_class(b));
    if (reference::linear_order_by_scan(k4, middles_of(b))) ++linear;
  }
  EXPECT_EQ(classes.size(), 2u);
  EXPECT_EQ(classes.count(k4_class(on_k4(1, 1, 2, 2))), 1u);
  EXPECT_EQ(classes.count(k4_class(on_k4(1, 0, 3, 2))), 1u);
  EXPECT_EQ(linear, 12);
}

TEST(EnumeratePseudometric, OrderAndSetMatchScan) {
  for (int n = 3; n <= 5; ++n)
    for (const auto& f : enumerate_canonical(n)) {
      const Hypergraph h = decode(f);
      if (h.edge_count() > 8) continue;
      const auto all = all_pseudometric(h);
      const auto scan = reference::all_violation_free(h);
      ASSERT_EQ(all.size(), scan.size()) << f.str();
      for (std::size_t i = 0; i < all.size(); ++i) EXPECT_EQ(middles_of(all[i]), scan[i]) << f.str();
    }
}

TEST(EnumeratePseudometric, NonPseudometricGivesNothing) {
  EXPECT_EQ(enumerate_pseudometric(make_F2(), [](const Betweenness&) { return true; }), 0u);
}

TEST(EnumeratePseudometric, StopsEarly) {
  int seen = 0;
  enumerate_pseudometric(Hypergraph::complete(5), [&](const Betweenness&) { return ++seen < 3; });
  EXPECT_EQ(seen, 3);
}

TEST(LinearOrder, CollinearPoints) {
  const Hypergraph k5 = Hypergraph::complete(5);
  const Betweenness b = collinear_betweenness(k5, {0, 1, 2, 3, 4});
  const auto order = linear_order_from_complete(b, k5);
  ASSERT_TRUE(order.has_value());
  const std::vector<int> id{0, 1, 2, 3, 4};
  const std::vector<int> rev{4, 3, 2, 1, 0};
  EXPECT_TRUE(*order == id || *order == rev);
}

TEST(LinearOrder, EveryAssignmentOnFiveAndSixPointsIsLinear) {
  for (int n : {5, 6}) {
    const Hypergraph k = Hypergraph::complete(n);
    const auto all = all_pseudometric(k);
    std::uint64_t orders = 1;
    for (int i = 2; i <= n; ++i) orders *= static_cast<std::uint64_t>(i);
    EXPECT_EQ(all.size(), orders / 2);
    for (const auto& b : all) {
      const auto order = linear_order_from_complete(b, k);
      ASSERT_TRUE(order.has_value());
      EXPECT_TRUE(order_respects(b, *order));
    }
  }
}

TEST(LinearOrder, ScanOracleAgreesOnFivePoints) {
  const Hypergraph k5 = Hypergraph::complete(5);
  const auto scan = reference::all_violation_free(k5);
  EXPECT_EQ(scan.size(), 60u);
  for (const auto& m : scan) EXPECT_TRUE(reference::linear_order_by_scan(k5, m).has_value());
}

TEST(LinearOrder, Preconditions) {
  const Hypergraph k4 = Hypergraph::complete(4);
  EXPECT_THROW(linear_order_from_complete(on_k4(1, 0, 3, 2), k4), unsupported_size);
  const Hypergraph h(5, {Triple{0, 1, 2}});
  EXPECT_THROW(linear_order_from_complete(Betweenness(5, {{Triple{0, 1, 2}, 1}}), h), std::invalid_argument);
}

TEST(MetricImpliesPseudometric, SmallClasses) {
  for (int n = 3; n <= 5; ++n)
    for (const auto& f : enumerate_canonical(n)) {
      const Hypergraph h = decode(f);
      if (realize_metric(h)) EXPECT_TRUE(is_pseudometric(h)) << f.str();
    }
}
