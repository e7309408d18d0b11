#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "linelab/betweenness.hpp"
#include "linelab/canonical.hpp"
#include "linelab/hypergraph.hpp"
#include "linelab/rational_simplex.hpp"

namespace linelab {

/// A metric on 0..n-1 with exact rational distances and optional vertex
/// names. Construction validates positivity and the triangle inequality.
class RationalMetric {
 public:
  RationalMetric() = default;
  /// `upper` lists d(u,v) for u < v in colex pair order (pair_rank).
  /// Throws std::invalid_argument if the values do not form a metric.
  RationalMetric(int n, std::vector<Rational> upper, std::vector<std::string> names = {});

  /// Full square table; must be symmetric with a zero diagonal.
  static RationalMetric from_table(const std::vector<std::vector<Rational>>& table, std::vector<std::string> names = {});

  int order() const noexcept { return n_; }
  const Rational& distance(int u, int v) const;
  const std::vector<std::string>& names() const noexcept { return names_; }
  /// Name of v, or its index when unnamed.
  std::string name(int v) const;

  /// The same metric with vertex v of this metric placed at position perm[v].
  RationalMetric relabeled(const std::vector<int>& perm, std::vector<std::string> names = {}) const;
  /// Reorders the vertices to follow `order` (a permutation of names()).
  RationalMetric reordered_by_names(const std::vector<std::string>& order) const;
  RationalMetric scaled(const Rational& factor) const;

  friend bool operator==(const RationalMetric&, const RationalMetric&) = default;

 private:
  int n_ = 0;
  std::vector<Rational> upper_;
  std::vector<std::string> names_;
};

/// Triples {u,v,w} where some ordering achieves d(x,m) + d(m,y) = d(x,y).
Hypergraph edges_of_metric(const RationalMetric& m);

/// CSV: header row of vertex names (first cell empty), then one row per
/// vertex starting with its name; entries are integers or p/q.
RationalMetric parse_metric_csv(std::string_view text);
std::string to_metric_csv(const RationalMetric& m);

struct LpOutcome {
  enum class Status { Feasible, Infeasible };
  /// Why an Infeasible outcome failed: no point satisfies the equalities
  /// and d >= 1, or every point has zero margin.
  enum class Reason { None, NoSolution, ZeroMargin };
  Status status = Status::Infeasible;
  Reason reason = Reason::NoSolution;
  std::optional<RationalMetric> metric;
  /// The optimal uniform margin by which non-edge triples are strict.
  Rational slack;
  std::uint64_t pivots = 0;

  bool feasible() const noexcept { return status == Status::Feasible; }
};

/// Maximizes the margin eps subject to d >= 1, d(x,m) + d(m,y) = d(x,y) for
/// every edge with middle m, d(x,m) + d(m,y) - d(x,y) >= eps for every
/// non-edge and each of its three middles, and eps <= 1. Throws
/// std::invalid_argument unless b is a violation-free middle assignment of
/// exactly the edges of h.
LpOutcome lp_for_betweenness(const Hypergraph& h, const Betweenness& b);

struct MetricSearch {
  enum class Stage { Metric, NoPseudometricBetweenness, AllBetweennessInfeasible, CachedCertificate };
  Stage stage = Stage::NoPseudometricBetweenness;
  std::optional<RationalMetric> metric;
  std::uint64_t betweenness_tried = 0;
  /// Set for CachedCertificate.
  std::optional<VertexSet> certificate;
};

std::string to_string(MetricSearch::Stage stage);

struct MetricOptions {
  /// Worker threads for per-betweenness LP solves; results are still taken
  /// in betweenness order.
  int threads = 1;
};

/// Tries each pseudometric betweenness in lexicographic order and returns the
/// first metric with a positive margin.
MetricSearch search_metric(const Hypergraph& h, const MetricOptions& options = {});
std::optional<RationalMetric> realize_metric(const Hypergraph& h, const MetricOptions& options = {});

/// A vertex subset of size <= 8 whose induced sub-hypergraph has a canonical
/// form in `known_nonmetric`; subsets are scanned by size, then in
/// increasing bit order. Empty when none matches.
std::optional<VertexSet> quick_nonmetric_certificate(const Hypergraph& h, const std::set<CanonicalForm>& known_nonmetric);

}  // namespace linelab
