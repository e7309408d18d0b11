#include "linelab/metric.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace linelab {
namespace {

std::size_t pair_index(int u, int v) { return pair_rank(u, v); }

std::string trim(std::string_view s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && (s[b] == ' ' || s[b] == '\t' || s[b] == '\r')) ++b;
  while (e > b && (s[e - 1] == ' ' || s[e - 1] == '\t' || s[e - 1] == '\r')) --e;
  return std::string(s.substr(b, e - b));
}

// Cells may be wrapped in double quotes (needed for names like "(a,d)");
// a doubled quote inside a quoted cell stands for one quote.
std::vector<std::string> split_csv_line(std::string_view line) {
  std::vector<std::string> cells;
  std::string cell;
  bool quoted = false;
  bool was_quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char ch = line[i];
    if (quoted) {
      if (ch != '"') cell += ch;
      else if (i + 1 < line.size() && line[i + 1] == '"') cell += line[++i];
      else quoted = false;
    } else if (ch == '"') {
      if (!trim(cell).empty()) throw std::invalid_argument("stray quote in distance CSV");
      cell.clear();
      quoted = was_quoted = true;
    } else if (ch == ',') {
      cells.push_back(was_quoted ? cell : trim(cell));
      cell.clear();
      was_quoted = false;
    } else if (!was_quoted || ch == ' ' || ch == '\t' || ch == '\r') {
      if (!was_quoted) cell += ch;
    } else {
      throw std::invalid_argument("text after closing quote in distance CSV");
    }
  }
  if (quoted) throw std::invalid_argument("unterminated quote in distance CSV");
  cells.push_back(was_quoted ? cell : trim(cell));
  return cells;
}

std::string csv_cell(const std::string& text) {
  if (text.find_first_of(",\" ") == std::string::npos) return text;
  std::string out = "\"";
  for (char ch : text) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty distance entry");
  for (char ch : text)
    if (!((ch >= '0' && ch <= '9') || ch == '/' || ch == '-' || ch == '+'))
      throw std::invalid_argument("bad distance entry '" + text + "'");
  if (const auto slash = text.find('/'); slash != std::string::npos && text.find_first_not_of("0", slash + 1) == std::string::npos)
    throw std::invalid_argument("zero denominator in '" + text + "'");
  Rational q(text, 10);
  q.canonicalize();
  return q;
}

}  // namespace

RationalMetric::RationalMetric(int n, std::vector<Rational> upper, std::vector<std::string> names)
    : n_(n), upper_(std::move(upper)), names_(std::move(names)) {
  if (n < 0 || n > kMaxVertices) throw std::invalid_argument("metric size out of range");
  if (upper_.size() != binomial(n, 2)) throw std::invalid_argument("metric needs one distance per vertex pair");
  if (!names_.empty() && static_cast<int>(names_.size()) != n) throw std::invalid_argument("metric needs one name per vertex");
  for (const auto& d : upper_)
    if (sgn(d) <= 0) throw std::invalid_argument("metric distances must be positive");
  for (int c = 2; c < n; ++c)
    for (int b = 1; b < c; ++b)
      for (int a = 0; a < b; ++a) {
        const Rational& ab = distance(a, b);
        const Rational& bc = distance(b, c);
        const Rational& ac = distance(a, c);
        if (ab + bc < ac || ab + ac < bc || ac + bc < ab)
          throw std::invalid_argument("triangle inequality fails on {" + name(a) + "," + name(b) + "," + name(c) + "}");
      }
}

RationalMetric RationalMetric::from_table(const std::vector<std::vector<Rational>>& table, std::vector<std::string> names) {
  const int n = static_cast<int>(table.size());
  std::vector<Rational> upper(binomial(n, 2));
  for (int u = 0; u < n; ++u) {
    if (static_cast<int>(table[static_cast<std::size_t>(u)].size()) != n) throw std::invalid_argument("distance table must be square");
    if (sgn(table[static_cast<std::size_t>(u)][static_cast<std::size_t>(u)]) != 0)
      throw std::invalid_argument("distance table must have a zero diagonal");
    for (int v = u + 1; v < n; ++v) {
      const Rational& duv = table[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)];
      if (duv != table[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)])
        throw std::invalid_argument("distance table must be symmetric");
      upper[pair_index(u, v)] = duv;
    }
  }
  return RationalMetric(n, std::move(upper), std::move(names));
}

const Rational& RationalMetric::distance(int u, int v) const {
  if (u == v || u < 0 || v < 0 || u >= n_ || v >= n_) throw std::invalid_argument("distance needs two distinct vertices in range");
  return upper_[pair_index(u, v)];
}

std::string RationalMetric::name(int v) const {
  return names_.empty() ? std::to_string(v) : names_[static_cast<std::size_t>(v)];
}

RationalMetric RationalMetric::relabeled(const std::vector<int>& perm, std::vector<std::string> names) const {
  if (static_cast<int>(perm.size()) != n_) throw std::invalid_argument("relabeled: permutation has wrong length");
  std::vector<Rational> upper(upper_.size());
  for (int v = 1; v < n_; ++v)
    for (int u = 0; u < v; ++u)
      upper[pair_index(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)])] = upper_[pair_index(u, v)];
  if (names.empty() && !names_.empty()) {
    names.resize(names_.size());
    for (int v = 0; v < n_; ++v) names[static_cast<std::size_t>(perm[static_cast<std::size_t>(v)])] = names_[static_cast<std::size_t>(v)];
  }
  return RationalMetric(n_, std::move(upper), std::move(names));
}

RationalMetric RationalMetric::reordered_by_names(const std::vector<std::string>& order) const {
  if (names_.empty() || order.size() != names_.size()) throw std::invalid_argument("reordering needs a full list of names");
  std::vector<int> perm(static_cast<std::size_t>(n_), -1);
  for (int i = 0; i < n_; ++i) {
    const auto it = std::find(names_.begin(), names_.end(), order[static_cast<std::size_t>(i)]);
    if (it == names_.end()) throw std::invalid_argument("unknown vertex name '" + order[static_cast<std::size_t>(i)] + "'");
    auto& slot = perm[static_cast<std::size_t>(it - names_.begin())];
    if (slot != -1) throw std::invalid_argument("repeated vertex name");
    slot = i;
  }
  return relabeled(perm, order);
}

RationalMetric RationalMetric::scaled(const Rational& factor) const {
  if (sgn(factor) <= 0) throw std::invalid_argument("scale factor must be positive");
  std::vector<Rational> upper(upper_);
  for (auto& d : upper) d *= factor;
  return RationalMetric(n_, std::move(upper), names_);
}

Hypergraph edges_of_metric(const RationalMetric& m) {
  const int n = m.order();
  std::vector<Triple> edges;
  for (int c = 2; c < n; ++c)
    for (int b = 1; b < c; ++b)
      for (int a = 0; a < b; ++a) {
        const Rational& ab = m.distance(a, b);
        const Rational& bc = m.distance(b, c);
        const Rational& ac = m.distance(a, c);
        if (ab + bc == ac || ab + ac == bc || ac + bc == ab) edges.push_back(Triple{a, b, c});
      }
  return Hypergraph(n, edges);
}

RationalMetric parse_metric_csv(std::string_view text) {
  std::vector<std::vector<std::string>> rows;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    const std::string line = trim(text.substr(pos, end - pos));
    pos = end + 1;
    if (line.empty() || line[0] == '#') continue;
    rows.push_back(split_csv_line(line));
  }
  if (rows.empty()) throw std::invalid_argument("distance CSV is empty");
  std::vector<std::string> names(rows[0].begin() + 1, rows[0].end());
  const std::size_t n = names.size();
  if (rows.size() != n + 1) throw std::invalid_argument("distance CSV needs one row per header name");
  std::vector<std::vector<Rational>> table(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) {
    const auto& row = rows[i + 1];
    if (row.size() != n + 1) throw std::invalid_argument("distance CSV row " + std::to_string(i + 2) + " has the wrong number of cells");
    if (row[0] != names[i]) throw std::invalid_argument("distance CSV row " + std::to_string(i + 2) + " must be labeled '" + names[i] + "'");
    for (std::size_t j = 0; j < n; ++j) table[i][j] = parse_rational(row[j + 1]);
  }
  return RationalMetric::from_table(table, std::move(names));
}

std::string to_metric_csv(const RationalMetric& m) {
  std::ostringstream out;
  const int n = m.order();
  for (int v = 0; v < n; ++v) out << ',' << csv_cell(m.name(v));
  out << '\n';
  for (int u = 0; u < n; ++u) {
    out << csv_cell(m.name(u));
    for (int v = 0; v < n; ++v) out << ',' << (u == v ? std::string("0") : m.distance(u, v).get_str());
    out << '\n';
  }
  return out.str();
}

// The two orderings of an edge {x,m,y} that put x or y in the middle need no
// constraint: d(x,y) + d(y,m) - d(x,m) = 2 d(m,y) > 0 once the chosen
// equality holds, so they are strict automatically.
LpOutcome lp_for_betweenness(const Hypergraph& h, const Betweenness& b) {
  if (!b.covers_exactly(h)) throw std::invalid_argument("betweenness must assign exactly the hyperedges");
  if (!check_m3(b, h).empty()) throw std::invalid_argument("betweenness violates M3");
  const int n = h.order();
  const int pairs = static_cast<int>(binomial(n, 2));
  const int eps = pairs;

  // Distances are d = 1 + y with y >= 0.
  LinearProgram lp;
  lp.variables = pairs + 1;
  lp.objective.assign(static_cast<std::size_t>(lp.variables), Rational(0));
  lp.objective[static_cast<std::size_t>(eps)] = 1;
  auto p = [](int u, int v) { return static_cast<int>(pair_index(u, v)); };
  for (int c = 2; c < n; ++c)
    for (int bb = 1; bb < c; ++bb)
      for (int a = 0; a < bb; ++a) {
        const Triple t{a, bb, c};
        if (const auto mid = b.middle(t)) {
          const int m = *mid;
          const int x = m == a ? bb : a;
          const int y = m == c ? bb : c;
          lp.constraints.push_back(LinearConstraint{{{p(x, m), 1}, {p(m, y), 1}, {p(x, y), -1}}, Relation::Equal, Rational(-1)});
        } else {
          for (int m : {a, bb, c}) {
            const int x = m == a ? bb : a;
            const int y = m == c ? bb : c;
            lp.constraints.push_back(
                LinearConstraint{{{p(x, m), 1}, {p(m, y), 1}, {p(x, y), -1}, {eps, -1}}, Relation::GreaterEqual, Rational(-1)});
          }
        }
      }
  lp.constraints.push_back(LinearConstraint{{{eps, 1}}, Relation::LessEqual, Rational(1)});

  const LpSolution sol = solve_lp(lp);
  LpOutcome out;
  out.pivots = sol.pivots;
  if (sol.status != LpStatus::Optimal) {
    out.reason = LpOutcome::Reason::NoSolution;
    return out;
  }
  out.slack = sol.objective;
  if (sgn(sol.objective) <= 0) {
    out.reason = LpOutcome::Reason::ZeroMargin;
    return out;
  }
  std::vector<Rational> upper(static_cast<std::size_t>(pairs));
  for (int i = 0; i < pairs; ++i) upper[static_cast<std::size_t>(i)] = 1 + sol.values[static_cast<std::size_t>(i)];
  RationalMetric metric(n, std::move(upper));

  // Substitute back: equality on edges, margin >= slack elsewhere.
  for (int c = 2; c < n; ++c)
    for (int bb = 1; bb < c; ++bb)
      for (int a = 0; a < bb; ++a) {
        const Triple t{a, bb, c};
        const auto mid = b.middle(t);
        for (int m : {a, bb, c}) {
          const int x = m == a ? bb : a;
          const int y = m == c ? bb : c;
          const Rational deficiency = metric.distance(x, m) + metric.distance(m, y) - metric.distance(x, y);
          if (mid && *mid == m && sgn(deficiency) != 0) throw std::logic_error("LP solution breaks an edge equality");
          if (!mid && deficiency < out.slack) throw std::logic_error("LP solution breaks a non-edge margin");
        }
      }
  out.status = LpOutcome::Status::Feasible;
  out.reason = LpOutcome::Reason::None;
  out.metric = std::move(metric);
  return out;
}

std::string to_string(MetricSearch::Stage stage) {
  switch (stage) {
    case MetricSearch::Stage::Metric: return "metric";
    case MetricSearch::Stage::NoPseudometricBetweenness: return "no-pseudometric-B";
    case MetricSearch::Stage::AllBetweennessInfeasible: return "all-B-infeasible";
    case MetricSearch::Stage::CachedCertificate: return "cached-subhypergraph-certificate";
  }
  return "unknown";
}

MetricSearch search_metric(const Hypergraph& h, const MetricOptions& options) {
  MetricSearch out;
  const int threads = std::max(1, options.threads);
  const std::size_t batch_size = threads == 1 ? 1 : static_cast<std::size_t>(threads) * 4;
  std::vector<Betweenness> batch;
  bool any = false;

  auto flush = [&]() {
    std::vector<std::optional<RationalMetric>> results(batch.size());
    if (threads == 1 || batch.size() == 1) {
      for (std::size_t i = 0; i < batch.size(); ++i) {
        auto lp = lp_for_betweenness(h, batch[i]);
        if (lp.feasible()) {
          results[i] = std::move(lp.metric);
          break;
        }
      }
    } else {
      std::atomic<std::size_t> next{0};
      std::vector<std::jthread> pool;
      for (int t = 0; t < threads; ++t)
        pool.emplace_back([&]() {
          for (std::size_t i = next++; i < batch.size(); i = next++) {
            auto lp = lp_for_betweenness(h, batch[i]);
            if (lp.feasible()) results[i] = std::move(lp.metric);
          }
        });
    }
    for (std::size_t i = 0; i < batch.size(); ++i) {
      ++out.betweenness_tried;
      if (results[i]) {
        out.metric = std::move(results[i]);
        return true;
      }
    }
    batch.clear();
    return false;
  };

  bool done = false;
  enumerate_pseudometric(h, [&](const Betweenness& b) {
    any = true;
    batch.push_back(b);
    if (batch.size() >= batch_size && flush()) {
      done = true;
      return false;
    }
    return true;
  });
  if (!done && !batch.empty()) done = flush();
  if (done) {
    out.stage = MetricSearch::Stage::Metric;
  } else {
    out.stage = any ? MetricSearch::Stage::AllBetweennessInfeasible : MetricSearch::Stage::NoPseudometricBetweenness;
  }
  return out;
}

std::optional<RationalMetric> realize_metric(const Hypergraph& h, const MetricOptions& options) {
  return search_metric(h, options).metric;
}

std::optional<VertexSet> quick_nonmetric_certificate(const Hypergraph& h, const std::set<CanonicalForm>& known_nonmetric) {
  const int n = h.order();
  std::vector<int> sizes;
  for (const auto& f : known_nonmetric)
    if (f.n <= n && f.n <= kMaxCanonicalVertices && (sizes.empty() || sizes.back() != f.n)) sizes.push_back(f.n);
  std::sort(sizes.begin(), sizes.end());
  sizes.erase(std::unique(sizes.begin(), sizes.end()), sizes.end());
  for (int k : sizes) {
    if (k == 0) return VertexSet{0};
    // Gosper's hack: k-subsets of {0..n-1} in increasing numeric order.
    VertexSet w = (VertexSet{1} << k) - 1;
    const VertexSet limit = all_vertices(n);
    while (w <= limit && (w & ~limit) == 0) {
      if (known_nonmetric.contains(canonical_form(induced(h, w)))) return w;
      const VertexSet c = w & (~w + 1);
      const VertexSet r = w + c;
      if (r == 0) break;
      w = (((r ^ w) >> 2) / c) | r;
    }
  }
  return std::nullopt;
}

}  // namespace linelab
