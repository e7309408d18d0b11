#include "linelab/claims.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <set>
#include <stdexcept>

#include "linelab/betweenness.hpp"
#include "linelab/canonical.hpp"
#include "linelab/enumeration.hpp"
#include "linelab/families.hpp"
#include "linelab/h3_format.hpp"
#include "linelab/metric.hpp"
#include "linelab/reference.hpp"

namespace linelab {
namespace {

constexpr const char* kF1Minus1 =
    ",\"(a,d)\",\"(b,d)\",\"(c,d)\",\"(a,e)\",\"(b,e)\",\"(c,e)\",2\n"
    "\"(a,d)\",0,1,2,3,4,5,3\n"
    "\"(b,d)\",1,0,1,2,3,4,2\n"
    "\"(c,d)\",2,1,0,1,2,3,1\n"
    "\"(a,e)\",3,2,1,0,1,2,1\n"
    "\"(b,e)\",4,3,2,1,0,1,2\n"
    "\"(c,e)\",5,4,3,2,1,0,3\n"
    "2,3,2,1,1,2,3,0\n";

constexpr const char* kF1Minus2 =
    ",\"(a,d)\",\"(a,e)\",\"(b,d)\",\"(b,e)\",\"(c,d)\",\"(c,e)\",1\n"
    "\"(a,d)\",0,2,4,6,8,10,6\n"
    "\"(a,e)\",2,0,2,4,6,8,4\n"
    "\"(b,d)\",4,2,0,2,4,6,5\n"
    "\"(b,e)\",6,4,2,0,2,4,3\n"
    "\"(c,d)\",8,6,4,2,0,2,4\n"
    "\"(c,e)\",10,8,6,4,2,0,6\n"
    "1,6,4,5,3,4,6,0\n";

constexpr const char* kF1MinusCd =
    ",\"(a,d)\",\"(b,d)\",\"(b,e)\",\"(c,e)\",\"(a,e)\",1,2\n"
    "\"(a,d)\",0,2,4,6,8,5,4\n"
    "\"(b,d)\",2,0,2,4,6,5,2\n"
    "\"(b,e)\",4,2,0,2,4,3,2\n"
    "\"(c,e)\",6,4,2,0,2,3,4\n"
    "\"(a,e)\",8,6,4,2,0,3,6\n"
    "1,5,5,3,3,3,0,4\n"
    "2,4,2,2,4,6,4,0\n";

constexpr const char* kF3MinusA1 =
    ",a2,a3,b3,b2,b1\n"
    "a2,0,1,2,1,2\n"
    "a3,1,0,1,2,3\n"
    "b3,2,1,0,1,2\n"
    "b2,1,2,1,0,3\n"
    "b1,2,3,2,3,0\n";

constexpr const char* kF3MinusB1 =
    ",a2,a1,a3,b3,b2\n"
    "a2,0,1,2,1,1\n"
    "a1,1,0,1,2,2\n"
    "a3,2,1,0,1,1\n"
    "b3,1,2,1,0,2\n"
    "b2,1,2,1,2,0\n";

class Checker {
 public:
  explicit Checker(ClaimResult& result) : result_(result) {}
  bool check(bool condition, const std::string& what) {
    result_.details.push_back((condition ? "ok   " : "FAIL ") + what);
    if (!condition) failed_ = true;
    return condition;
  }
  void note(const std::string& what) { result_.details.push_back("     " + what); }
  bool failed() const { return failed_; }

 private:
  ClaimResult& result_;
  bool failed_ = false;
};

VertexSet named_set(const std::vector<std::string>& names, std::initializer_list<std::string_view> members) {
  VertexSet s = 0;
  for (auto m : members) s |= VertexSet{1} << vertex_index(names, m);
  return s;
}

VertexSet without(int n, int v) { return all_vertices(n) & ~(VertexSet{1} << v); }

std::string lines_text(const std::vector<VertexSet>& lines) {
  std::string out;
  for (VertexSet s : lines) out += format_vertex_set(s) + " ";
  return out;
}

void claim_f0(const Fixtures& fx, Checker& c) {
  const auto start = std::chrono::steady_clock::now();
  const Hypergraph& h = fx.f0;
  if (!c.check(h.order() == 11, "F0 has 11 vertices")) return;
  c.check(h.edge_count() == 84 + 18, "F0 has C(9,3)+18 = 102 hyperedges (found " + std::to_string(h.edge_count()) + ")");
  const auto names = f0_vertex_names();
  std::vector<VertexSet> expected{
      named_set(names, {"1", "2"}),
      named_set(names, {"1", "(a,d)", "(a,e)", "(a,f)"}),
      named_set(names, {"1", "(b,d)", "(b,e)", "(b,f)"}),
      named_set(names, {"1", "(c,d)", "(c,e)", "(c,f)"}),
      named_set(names, {"2", "(a,d)", "(b,d)", "(c,d)"}),
      named_set(names, {"2", "(a,e)", "(b,e)", "(c,e)"}),
      named_set(names, {"2", "(a,f)", "(b,f)", "(c,f)"}),
  };
  const VertexSet grid = all_vertices(11) & ~VertexSet{3};
  expected.push_back(grid | 1);
  expected.push_back(grid | 2);
  expected.push_back(grid);
  std::sort(expected.begin(), expected.end());
  const auto lines = all_lines(h);
  c.check(lines.size() == 10, "exactly 10 distinct lines (found " + std::to_string(lines.size()) + ")");
  c.check(lines == expected, "line point-sets equal the published list");
  c.check(std::find(lines.begin(), lines.end(), all_vertices(11)) == lines.end(), "no line equals V");
  c.check(!has_dbe_property(h), "DBE property fails");
  if (c.failed()) c.note("lines: " + lines_text(lines));
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  c.check(secs < 1.0, "runtime under 1 s (" + std::to_string(secs) + " s)");
}

void claim_count113(const Fixtures& fx, const ClaimOptions& opt, Checker& c) {
  const auto forms = minimal_non_pseudometric(6, EnumOptions{1, 0, opt.threads});
  c.check(forms.size() == 113, "113 minimal non-pseudometric classes on 6 vertices (found " + std::to_string(forms.size()) + ")");
  const auto has = [&](const Hypergraph& h) {
    return h.order() == 6 && std::binary_search(forms.begin(), forms.end(), canonical_form(h));
  };
  c.check(has(fx.f2), "list contains the canonical form of F2");
  c.check(has(fx.f3), "list contains the canonical form of F3");
}

bool check_deletions_metric(const Hypergraph& h, const std::string& label, const ClaimOptions& opt, Checker& c) {
  bool all = true;
  for (int v = 0; v < h.order(); ++v) {
    const Hypergraph sub = induced(h, without(h.order(), v));
    const auto m = realize_metric(sub, MetricOptions{opt.threads});
    all = c.check(m.has_value() && edges_of_metric(*m) == sub, label + " minus vertex " + std::to_string(v) + " is metric (round trip exact)") && all;
  }
  return all;
}

void check_table(const DistanceTableInfo& t, const Fixtures& fx, Checker& c) {
  const bool f1 = t.host == "F1";
  const Hypergraph& host = f1 ? fx.f1 : fx.f3;
  const auto names = f1 ? f1_vertex_names() : f23_vertex_names();
  try {
    if (host.order() != static_cast<int>(names.size())) throw std::invalid_argument(t.host + " fixture has the wrong order");
    const auto it = fx.tables.find(t.id);
    if (it == fx.tables.end()) throw std::invalid_argument("missing table");
    const RationalMetric table = parse_metric_csv(it->second);
    const int removed = vertex_index(names, t.removed);
    std::vector<std::string> order;
    for (int v = 0; v < host.order(); ++v)
      if (v != removed) order.push_back(names[static_cast<std::size_t>(v)]);
    const RationalMetric aligned = table.reordered_by_names(order);
    const Hypergraph expected = induced(host, without(host.order(), removed));
    c.check(edges_of_metric(aligned) == expected, "table " + t.id + " is a metric realizing " + t.host + " minus " + t.removed + " exactly");
  } catch (const std::exception& e) {
    c.check(false, "table " + t.id + ": " + e.what());
  }
}

void claim_f1(const Fixtures& fx, const ClaimOptions& opt, Checker& c) {
  if (!c.check(fx.f1.order() == 8 && fx.f1.edge_count() == 29, "F1 has 8 vertices and 20 + 9 = 29 hyperedges")) return;
  c.check(!find_pseudometric(fx.f1).has_value(), "F1 is not pseudometric");
  check_deletions_metric(fx.f1, "F1", opt, c);
  for (const auto& t : distance_tables())
    if (t.host == "F1") check_table(t, fx, c);
}

void claim_f23(const Fixtures& fx, const ClaimOptions& opt, Checker& c) {
  const bool shapes = c.check(fx.f2.order() == 6 && fx.f2.edge_count() == 16, "F2 has 6 vertices and 16 hyperedges") &
                      c.check(fx.f3.order() == 6 && fx.f3.edge_count() == 17, "F3 has 6 vertices and 17 hyperedges");
  if (!shapes) return;
  c.check(canonical_form(fx.f2) != canonical_form(fx.f3), "F2 and F3 are not isomorphic");
  c.check(!find_pseudometric(fx.f2).has_value(), "F2 is not pseudometric");
  c.check(!find_pseudometric(fx.f3).has_value(), "F3 is not pseudometric");
  check_deletions_metric(fx.f2, "F2", opt, c);
  check_deletions_metric(fx.f3, "F3", opt, c);
  for (const auto& t : distance_tables())
    if (t.host == "F3") check_table(t, fx, c);
}

void claim_fano(const ClaimOptions& opt, Checker& c) {
  const auto start = std::chrono::steady_clock::now();
  const Hypergraph fano = make_fano();
  c.check(fano.order() == 7 && fano.edge_count() == 7, "Fano hypergraph has 7 vertices and 7 hyperedges");
  const auto b = find_pseudometric(fano);
  c.check(b.has_value() && check_m3(*b, fano).empty(), "Fano hypergraph is pseudometric");
  const MetricSearch search = search_metric(fano, MetricOptions{opt.threads});
  c.check(!search.metric.has_value(), "no pseudometric betweenness of it is metric (" + std::to_string(search.betweenness_tried) +
                                          " tried, stage " + to_string(search.stage) + ")");
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  c.check(secs < 60.0, "runtime under 1 min (" + std::to_string(secs) + " s)");
}

void claim_thm1(const ClaimOptions& opt, Checker& c) {
  for (int n = 2; n <= 6; ++n) {
    std::uint64_t classes = 0;
    std::uint64_t mismatches = 0;
    std::uint64_t bad_witnesses = 0;
    std::uint64_t multi = 0;
    enumerate_canonical(
        n, EnumFilter{},
        [&](const CanonicalForm& f) {
          const Hypergraph h = decode(f);
          ++classes;
          const auto w = multi_line_witness(h);
          const bool two = reference::pair_in_two_lines(h);
          if (two) ++multi;
          if (w.has_value() != two) ++mismatches;
          if (w) {
            const auto [p, q, r, s] = *w;
            const bool distinct = p != q && p != r && p != s && q != r && q != s && r != s;
            if (!distinct || !h.has_edge(p, q, r) || !h.has_edge(p, q, s) || h.has_edge(p, r, s)) ++bad_witnesses;
          }
        },
        EnumOptions{1, 0, opt.threads});
    c.check(mismatches == 0 && bad_witnesses == 0,
            "n=" + std::to_string(n) + ": witness exists iff a pair lies in two lines (" + std::to_string(classes) + " classes, " +
                std::to_string(multi) + " with such a pair)");
  }
}

void report_theorem(const SearchReport& r, Checker& c) {
  std::string extra;
  for (const auto& [family, count] : r.equality_cases) extra += " " + family + "=" + std::to_string(count);
  c.check(r.ok(), r.subject + " n=" + std::to_string(r.n) + ": " + std::to_string(r.classes) + " classes, " +
                      std::to_string(r.violations) + " violations" + (extra.empty() ? "" : ", equality:" + extra));
  for (const auto& w : r.witnesses)
    if (w.kind != "equality") c.note("witness " + w.form.str() + " " + w.kind);
}

void claim_thm2(const ClaimOptions& opt, Checker& c) {
  for (int n = 2; n <= 6; ++n) report_theorem(verify_theorem(n, TheoremCase::T2, EnumOptions{1, 0, opt.threads}), c);
}

void claim_thm45(const ClaimOptions& opt, Checker& c) {
  for (auto which : {TheoremCase::T4, TheoremCase::T5})
    for (int n = 2; n <= 6; ++n) report_theorem(verify_theorem(n, which, EnumOptions{1, 0, opt.threads}), c);
}

void claim_thm6(const ClaimOptions& opt, Checker& c) {
  for (int n = 2; n <= 7; ++n) report_theorem(verify_theorem(n, TheoremCase::T6, EnumOptions{1, 0, opt.threads}), c);
  for (int k = 2; k <= 4; ++k) {
    const std::vector<int> sizes(static_cast<std::size_t>(k), k);
    const auto lines = all_lines(make_layered(sizes)).size();
    c.check(lines == static_cast<std::size_t>(k * k * (k - 1)),
            "layered [" + std::to_string(k) + "]*" + std::to_string(k) + " has k^2(k-1) = " + std::to_string(k * k * (k - 1)) +
                " lines (found " + std::to_string(lines) + ")");
  }
}

void claim_steiner(const Fixtures& fx, const ClaimOptions& opt, Checker& c) {
  std::set<CanonicalForm> cache;
  if (fx.f2.order() <= kMaxCanonicalVertices) cache.insert(canonical_form(fx.f2));
  if (fx.f3.order() <= kMaxCanonicalVertices) cache.insert(canonical_form(fx.f3));
  for (int n : {7, 9}) {
    const Hypergraph h = make_steiner_complement(n);
    std::vector<VertexSet> expected;
    for (int x = 0; x < n; ++x) expected.push_back(without(n, x));
    std::sort(expected.begin(), expected.end());
    const auto lines = all_lines(h);
    const std::string tag = "STS(" + std::to_string(n) + ") complement";
    c.check(lines == expected, tag + ": lines are exactly the sets V minus a vertex");
    c.check(has_dbe_property(h) && lines.size() == static_cast<std::size_t>(n), tag + ": DBE holds with equality");
    const auto cert = quick_nonmetric_certificate(h, cache);
    c.check(cert.has_value() && cache.contains(canonical_form(induced(h, *cert))),
            tag + ": induced F2 or F3 found" + (cert ? " on " + format_vertex_set(*cert) : std::string()));
  }
  const auto search = search_metric(make_steiner_complement(7), MetricOptions{opt.threads});
  c.check(!search.metric.has_value(), "STS(7) complement is not metric (stage " + to_string(search.stage) + ")");
}

std::vector<std::pair<Triple, int>> as_entries(const Hypergraph& h, const reference::MiddleVector& middles) {
  std::vector<std::pair<Triple, int>> out;
  const auto edges = h.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) out.emplace_back(edges[i], middles[i]);
  return out;
}

void claim_lemma1(Checker& c) {
  const Hypergraph k5 = Hypergraph::complete(5);
  const auto assignments = reference::all_violation_free(k5);
  std::uint64_t ordered = 0;
  for (const auto& middles : assignments) {
    const Betweenness b(5, as_entries(k5, middles));
    const auto order = linear_order_from_complete(b, k5);
    if (!order) continue;
    bool good = true;
    for (int i = 0; i < 5; ++i)
      for (int j = i + 1; j < 5; ++j)
        for (int k = j + 1; k < 5; ++k) {
          const auto& o = *order;
          good = good && b.middle(Triple::of(o[static_cast<std::size_t>(i)], o[static_cast<std::size_t>(j)],
                                             o[static_cast<std::size_t>(k)])) == o[static_cast<std::size_t>(j)];
        }
    if (good) ++ordered;
  }
  c.check(ordered == assignments.size(), "n=5 complete: all " + std::to_string(assignments.size()) +
                                             " violation-free assignments (of 3^10) admit a linear order");
  c.check(assignments.size() == all_pseudometric(k5).size(), "n=5 complete: solver enumeration agrees with the 3^10 scan");

  const Hypergraph k4 = Hypergraph::complete(4);
  const auto four = reference::all_violation_free(k4);
  std::set<std::vector<int>> classes;
  std::set<std::vector<int>> with_order;
  for (const auto& middles : four) {
    std::vector<int> best;
    std::vector<int> perm{0, 1, 2, 3};
    do {
      std::vector<int> image(4);
      const auto edges = k4.edges();
      for (std::size_t i = 0; i < edges.size(); ++i) {
        const Triple t = Triple::of(perm[static_cast<std::size_t>(edges[i].a)], perm[static_cast<std::size_t>(edges[i].b)],
                                    perm[static_cast<std::size_t>(edges[i].c)]);
        image[triple_rank(t)] = perm[static_cast<std::size_t>(middles[i])];
      }
      if (best.empty() || image < best) best = image;
    } while (std::next_permutation(perm.begin(), perm.end()));
    classes.insert(best);
    if (reference::linear_order_by_scan(k4, middles)) with_order.insert(best);
  }
  c.check(classes.size() == 2 && with_order.size() == 1,
          "n=4 complete: " + std::to_string(four.size()) + " violation-free assignments form " + std::to_string(classes.size()) +
              " classes, " + std::to_string(with_order.size()) + " linear and " + std::to_string(classes.size() - with_order.size()) +
              " cyclic");
}

void claim_oracle(const ClaimOptions& opt, Checker& c) {
  for (int n = 0; n <= 5; ++n) {
    const auto forms = enumerate_canonical(n, EnumFilter{}, EnumOptions{1, 0, opt.threads});
    std::set<std::uint64_t> minima;
    for (const auto& f : forms) minima.insert(reference::full_scan_minimum(n, f.bits));
    const auto naive = reference::all_class_minima(n);
    c.check(minima.size() == forms.size() && std::vector<std::uint64_t>(minima.begin(), minima.end()) == naive,
            "n=" + std::to_string(n) + ": augmentation yields the same " + std::to_string(naive.size()) +
                " classes as generate-all with dedup (" + std::to_string(forms.size()) + " produced)");
    std::uint64_t disagreements = 0;
    std::uint64_t pseudo = 0;
    for (const auto& f : forms) {
      const Hypergraph h = decode(f);
      const auto b = find_pseudometric(h);
      const bool scan = reference::pseudometric_by_scan(h);
      if (scan) ++pseudo;
      if (b.has_value() != scan) ++disagreements;
      if (b) {
        reference::MiddleVector middles;
        for (const auto& e : h.edges()) middles.push_back(*b->middle(e));
        if (!reference::m3_holds(h, middles)) ++disagreements;
      }
    }
    c.check(disagreements == 0, "n=" + std::to_string(n) + ": pseudometric search agrees with the 3^|E| scan on every class (" +
                                    std::to_string(pseudo) + " pseudometric)");
  }
}

}  // namespace

Fixtures Fixtures::builtin() {
  Fixtures fx;
  fx.f0 = make_F0();
  fx.f1 = make_F1();
  fx.f2 = make_F2();
  fx.f3 = make_F3();
  fx.tables = {{"F1-minus-1", kF1Minus1},
               {"F1-minus-2", kF1Minus2},
               {"F1-minus-cd", kF1MinusCd},
               {"F3-minus-a1", kF3MinusA1},
               {"F3-minus-b1", kF3MinusB1}};
  return fx;
}

Fixtures Fixtures::load(const std::filesystem::path& dir) {
  if (!std::filesystem::is_directory(dir)) throw std::invalid_argument("fixture directory not found: " + dir.string());
  Fixtures fx = builtin();
  const std::pair<const char*, Hypergraph*> graphs[] = {{"F0.h3", &fx.f0}, {"F1.h3", &fx.f1}, {"F2.h3", &fx.f2}, {"F3.h3", &fx.f3}};
  for (const auto& [file, target] : graphs)
    if (std::filesystem::exists(dir / file)) *target = read_h3_file(dir / file);
  for (auto& [id, text] : fx.tables)
    if (std::filesystem::exists(dir / (id + ".csv"))) text = read_text_file(dir / (id + ".csv"));
  return fx;
}

void Fixtures::write(const std::filesystem::path& dir) const {
  std::filesystem::create_directories(dir);
  write_h3_file(dir / "F0.h3", f0);
  write_h3_file(dir / "F1.h3", f1);
  write_h3_file(dir / "F2.h3", f2);
  write_h3_file(dir / "F3.h3", f3);
  for (const auto& [id, text] : tables) {
    std::ofstream out(dir / (id + ".csv"));
    out << text;
    if (!out) throw std::runtime_error("cannot write " + (dir / (id + ".csv")).string());
  }
}

const std::vector<DistanceTableInfo>& distance_tables() {
  static const std::vector<DistanceTableInfo> tables{{"F1-minus-1", "F1", "1"},
                                                     {"F1-minus-2", "F1", "2"},
                                                     {"F1-minus-cd", "F1", "(c,d)"},
                                                     {"F3-minus-a1", "F3", "a1"},
                                                     {"F3-minus-b1", "F3", "b1"}};
  return tables;
}

const std::vector<ClaimInfo>& claim_catalog() {
  static const std::vector<ClaimInfo> catalog{
      {"f0", 1, "F0: ten lines, none equal to V, no DBE"},
      {"count113", 2, "113 minimal non-pseudometric classes on six vertices"},
      {"f1", 3, "F1 pipeline"},
      {"f23", 4, "F2/F3 pipeline"},
      {"fano", 5, "Fano hypergraph: pseudometric, not metric"},
      {"thm1", 6, "two lines through a pair iff a (p,q,r,s) witness"},
      {"thm2", 7, "no 4-set with two edges: |L| >= n, equality iff family"},
      {"thm45", 8, "no 4-set with 1 or 3 edges / with 4 edges: DBE"},
      {"thm6", 9, "no 4-set with 4 edges: (n/3)^(3/2) lines; layered k^2(k-1)"},
      {"steiner", 10, "Steiner triple system complements"},
      {"lemma1", 11, "complete betweenness: linear orders"},
      {"oracle", 12, "oracle equivalence at n <= 5"},
  };
  return catalog;
}

ClaimResult run_claim(std::string_view id, const Fixtures& fixtures, const ClaimOptions& options) {
  const auto& catalog = claim_catalog();
  const auto it = std::find_if(catalog.begin(), catalog.end(), [&](const ClaimInfo& info) { return info.id == id; });
  if (it == catalog.end()) throw std::invalid_argument("unknown check '" + std::string(id) + "'");
  ClaimResult result;
  result.info = *it;
  Checker c(result);
  const auto start = std::chrono::steady_clock::now();
  try {
    if (id == "f0") claim_f0(fixtures, c);
    else if (id == "count113") claim_count113(fixtures, options, c);
    else if (id == "f1") claim_f1(fixtures, options, c);
    else if (id == "f23") claim_f23(fixtures, options, c);
    else if (id == "fano") claim_fano(options, c);
    else if (id == "thm1") claim_thm1(options, c);
    else if (id == "thm2") claim_thm2(options, c);
    else if (id == "thm45") claim_thm45(options, c);
    else if (id == "thm6") claim_thm6(options, c);
    else if (id == "steiner") claim_steiner(fixtures, options, c);
    else if (id == "lemma1") claim_lemma1(c);
    else if (id == "oracle") claim_oracle(options, c);
  } catch (const std::exception& e) {
    c.check(false, std::string("error: ") + e.what());
  }
  result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  result.passed = !c.failed() && !result.details.empty();
  return result;
}

std::vector<ClaimResult> run_claims(const Fixtures& fixtures, const ClaimOptions& options,
                                    const std::function<void(const ClaimResult&)>& on_result) {
  for (const auto& id : options.only)
    if (std::none_of(claim_catalog().begin(), claim_catalog().end(), [&](const ClaimInfo& info) { return info.id == id; }))
      throw std::invalid_argument("unknown check '" + id + "'");
  std::vector<ClaimResult> results;
  for (const auto& info : claim_catalog()) {
    if (!options.only.empty() && std::find(options.only.begin(), options.only.end(), info.id) == options.only.end()) continue;
    results.push_back(run_claim(info.id, fixtures, options));
    if (on_result) on_result(results.back());
  }
  return results;
}

}  // namespace linelab
