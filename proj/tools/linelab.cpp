#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "linelab/betweenness.hpp"
#include "linelab/canonical.hpp"
#include "linelab/claims.hpp"
#include "linelab/enumeration.hpp"
#include "linelab/families.hpp"
#include "linelab/h3_format.hpp"
#include "linelab/hypergraph.hpp"
#include "linelab/manifest.hpp"
#include "linelab/metric.hpp"

namespace fs = std::filesystem;
using namespace linelab;

namespace {

constexpr int kOk = 0;
constexpr int kFound = 1;
constexpr int kUsage = 2;

struct Settings {
  int threads = 0;
  std::string manifest;
  std::string out;
};

int thread_count(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("LINELAB_THREADS")) {
    try {
      const int n = std::stoi(env);
      if (n > 0) return n;
    } catch (const std::exception&) {
    }
    throw std::invalid_argument("LINELAB_THREADS must be a positive integer");
  }
  return 1;
}

class input_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Hypergraph load(const std::string& path, RunManifest& manifest) {
  const std::string text = read_text_file(path);
  manifest.add_input(path, text);
  try {
    return parse_h3(text);
  } catch (const parse_error& e) {
    throw input_error(path + ":" + e.what());
  }
}

void write_text(const fs::path& path, const std::string& text) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path);
  out << text;
  if (!out) throw std::runtime_error("cannot write " + path.string());
}

std::string forms_text(const std::vector<CanonicalForm>& forms) {
  std::string out;
  for (const auto& f : forms) out += f.str() + "\n";
  return out;
}

std::vector<CanonicalForm> read_forms(const std::string& path, RunManifest& manifest) {
  const std::string text = read_text_file(path);
  manifest.add_input(path, text);
  std::vector<CanonicalForm> forms;
  std::istringstream in(text);
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (line.empty() || line[0] == '#') continue;
    try {
      forms.push_back(CanonicalForm::parse(line));
    } catch (const std::invalid_argument& e) {
      throw input_error(path + ":" + std::to_string(number) + ":1: " + e.what());
    }
  }
  return forms;
}

Hypergraph generate(const std::string& family, int n, int q, const std::vector<int>& sizes) {
  if (family == "near-pencil") return make_near_pencil(n);
  if (family == "plane") return make_projective_plane(q);
  if (family == "fano") return make_fano();
  if (family == "steiner") return make_steiner_complement(n);
  if (family == "complete") return Hypergraph::complete(n);
  if (family == "empty") return Hypergraph(n);
  if (family == "layered") return make_layered(sizes);
  if (family == "F0") return make_F0();
  if (family == "F1") return make_F1();
  if (family == "F2") return make_F2();
  if (family == "F3") return make_F3();
  throw std::invalid_argument("unknown family '" + family + "'");
}

void add_common(CLI::App* cmd, Settings& s) {
  cmd->add_option("--threads", s.threads, "worker threads (default: LINELAB_THREADS or 1)")->check(CLI::PositiveNumber);
  cmd->add_option("--manifest", s.manifest, "write the run manifest here (default: <out>/manifest.txt, else stderr)");
}

void report_files(const SearchReport& r, const std::string& out, const std::string& stem) {
  if (out.empty()) return;
  write_text(fs::path(out) / (stem + ".txt"), r.to_text());
  write_text(fs::path(out) / (stem + "-witnesses.csv"), r.witnesses_csv());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"linelab: lines, betweenness and metric realizability of 3-uniform hypergraphs"};
  app.set_version_flag("--version", std::string(LINELAB_VERSION));
  app.require_subcommand(1);

  Settings s;
  std::function<int(RunManifest&)> action;

  // gen
  std::string family;
  int gen_n = 0;
  int gen_q = 2;
  std::vector<int> sizes;
  std::string gen_output;
  auto* gen = app.add_subcommand("gen", "write a named hypergraph as .h3 (or 'fixtures' as a directory)");
  gen->add_option("family", family,
                  "near-pencil, plane, fano, steiner, complete, empty, layered, F0, F1, F2, F3, fixtures")
      ->required();
  gen->add_option("--n", gen_n, "vertex count");
  gen->add_option("--q", gen_q, "plane order (2 or 3)");
  gen->add_option("--sizes", sizes, "part sizes for layered")->delimiter(',');
  gen->add_option("-o,--output", gen_output, "output file (directory for fixtures)");
  add_common(gen, s);
  gen->callback([&] {
    action = [&](RunManifest& m) {
      if (family == "fixtures") {
        if (gen_output.empty()) throw std::invalid_argument("gen fixtures needs --output DIR");
        Fixtures::builtin().write(gen_output);
        m.add_summary("fixtures", gen_output);
        return kOk;
      }
      const Hypergraph h = generate(family, gen_n, gen_q, sizes);
      const std::string text = to_h3(h);
      if (gen_output.empty()) std::cout << text;
      else write_text(gen_output, text);
      m.add_summary("vertices", std::to_string(h.order()));
      m.add_summary("edges", std::to_string(h.edge_count()));
      return kOk;
    };
  });

  // lines
  std::string file;
  auto* lines = app.add_subcommand("lines", "list distinct lines and the DBE verdict");
  lines->add_option("file", file, ".h3 input")->required();
  add_common(lines, s);
  lines->callback([&] {
    action = [&](RunManifest& m) {
      const Hypergraph h = load(file, m);
      const auto ls = all_lines(h);
      for (VertexSet l : ls) std::cout << format_vertex_set(l) << '\n';
      const bool dbe = has_dbe_property(h);
      std::cout << "lines: " << ls.size() << "\nDBE: " << (dbe ? "yes" : "no") << '\n';
      m.add_summary("lines", std::to_string(ls.size()));
      m.add_summary("dbe", dbe ? "yes" : "no");
      return kOk;
    };
  });

  // profile
  auto* profile = app.add_subcommand("profile", "count 4-subsets by induced edge count");
  profile->add_option("file", file, ".h3 input")->required();
  add_common(profile, s);
  profile->callback([&] {
    action = [&](RunManifest& m) {
      const Hypergraph h = load(file, m);
      const FourProfile p = four_profile(h);
      std::string summary;
      for (int i = 0; i <= 4; ++i) {
        std::cout << "edges=" << i << ": " << p.counts[static_cast<std::size_t>(i)] << '\n';
        summary += (i ? "," : "") + std::to_string(p.counts[static_cast<std::size_t>(i)]);
      }
      std::cout << "total: " << p.total() << '\n';
      m.add_summary("profile", summary);
      return kOk;
    };
  });

  // pseudo
  auto* pseudo = app.add_subcommand("pseudo", "decide pseudometric realizability");
  pseudo->add_option("file", file, ".h3 input")->required();
  add_common(pseudo, s);
  pseudo->callback([&] {
    action = [&](RunManifest& m) {
      const Hypergraph h = load(file, m);
      const PseudometricSearch r = search_pseudometric(h);
      if (r.betweenness) {
        std::cout << "PSEUDOMETRIC\n";
        for (const auto& [t, mid] : r.betweenness->entries())
          std::cout << '{' << t.a << ',' << t.b << ',' << t.c << "} middle " << mid << '\n';
      } else {
        std::cout << "NOT-PSEUDOMETRIC\n";
        for (const auto& step : r.refutation) std::cout << step << '\n';
      }
      std::cout << "nodes: " << r.nodes << '\n';
      m.add_summary("pseudometric", r.betweenness ? "yes" : "no");
      return kOk;
    };
  });

  // metric
  bool quick = false;
  std::string table_file;
  std::string csv_out;
  auto* metric = app.add_subcommand("metric", "decide metric realizability, or check a distance table");
  metric->add_option("file", file, ".h3 input")->required();
  metric->add_flag("--quick", quick, "first look for an induced known non-metric hypergraph");
  metric->add_option("--table", table_file, "check that this distance CSV realizes the hypergraph exactly");
  metric->add_option("--csv", csv_out, "also write the realizing distance table here");
  add_common(metric, s);
  metric->callback([&] {
    action = [&](RunManifest& m) {
      const Hypergraph h = load(file, m);
      if (!table_file.empty()) {
        const std::string text = read_text_file(table_file);
        m.add_input(table_file, text);
        const RationalMetric d = parse_metric_csv(text);
        const bool match = d.order() == h.order() && edges_of_metric(d) == h;
        std::cout << (match ? "TABLE-REALIZES" : "TABLE-MISMATCH") << '\n';
        m.add_summary("table", match ? "realizes" : "mismatch");
        return match ? kOk : kFound;
      }
      if (quick) {
        if (const auto cert = quick_nonmetric_certificate(h, known_nonmetric_cache())) {
          std::cout << "NOT-METRIC\nstage: " << to_string(MetricSearch::Stage::CachedCertificate) << "\ncertificate: " << format_vertex_set(*cert)
                    << " induces " << canonical_form(induced(h, *cert)).str() << '\n';
          m.add_summary("metric", "no");
          m.add_summary("stage", to_string(MetricSearch::Stage::CachedCertificate));
          return kOk;
        }
      }
      const MetricSearch r = search_metric(h, MetricOptions{thread_count(s.threads)});
      if (r.metric) {
        std::cout << "METRIC\n" << to_metric_csv(*r.metric);
        if (!csv_out.empty()) write_text(csv_out, to_metric_csv(*r.metric));
      } else {
        std::cout << "NOT-METRIC\nstage: " << to_string(r.stage) << '\n';
      }
      std::cout << "betweennesses tried: " << r.betweenness_tried << '\n';
      m.add_summary("metric", r.metric ? "yes" : "no");
      m.add_summary("stage", to_string(r.stage));
      return kOk;
    };
  });

  // enum
  int n = 6;
  std::vector<int> allow;
  int shards = 1;
  int shard_index = 0;
  std::vector<std::string> merge;
  auto* en = app.add_subcommand("enum", "list one canonical form per isomorphism class");
  en->add_option("--n", n, "vertex count");
  en->add_option("--allow", allow, "allowed induced edge counts on 4-subsets, e.g. 0,1,3,4")->delimiter(',')->check(CLI::Range(0, 4));
  en->add_option("--shards", shards, "number of shards")->check(CLI::PositiveNumber);
  en->add_option("--shard-index", shard_index, "shard to run (0-based)")->check(CLI::NonNegativeNumber);
  en->add_option("--out", s.out, "write forms into this directory");
  en->add_option("--merge", merge, "merge these form files instead of enumerating");
  add_common(en, s);
  en->callback([&] {
    action = [&](RunManifest& m) {
      std::vector<CanonicalForm> forms;
      std::string name;
      if (!merge.empty()) {
        std::vector<std::vector<CanonicalForm>> parts;
        for (const auto& path : merge) parts.push_back(read_forms(path, m));
        forms = merge_forms(parts);
        name = "merged.txt";
      } else {
        EnumFilter filter;
        if (!allow.empty()) {
          filter.four_count_allowed = 0;
          for (int c : allow) filter.four_count_allowed = static_cast<std::uint8_t>(filter.four_count_allowed | (1U << c));
        }
        forms = enumerate_canonical(n, filter, EnumOptions{shards, shard_index, thread_count(s.threads)});
        name = "forms-n" + std::to_string(n) + (shards > 1 ? "-shard" + std::to_string(shard_index) + "of" + std::to_string(shards) : "") + ".txt";
      }
      if (s.out.empty()) std::cout << forms_text(forms);
      else {
        write_text(fs::path(s.out) / name, forms_text(forms));
        std::cout << "classes: " << forms.size() << '\n';
      }
      m.add_summary("classes", std::to_string(forms.size()));
      return kOk;
    };
  });

  // minimal-nonpseudo
  auto* mnp = app.add_subcommand("minimal-nonpseudo", "minimal non-pseudometric classes on n <= 6 vertices");
  mnp->add_option("--n", n, "vertex count");
  mnp->add_option("--out", s.out, "write forms into this directory");
  add_common(mnp, s);
  mnp->callback([&] {
    action = [&](RunManifest& m) {
      const auto forms = minimal_non_pseudometric(n, EnumOptions{1, 0, thread_count(s.threads)});
      if (s.out.empty()) std::cout << forms_text(forms);
      else {
        write_text(fs::path(s.out) / ("minimal-nonpseudo-n" + std::to_string(n) + ".txt"), forms_text(forms));
        std::cout << "classes: " << forms.size() << '\n';
      }
      m.add_summary("classes", std::to_string(forms.size()));
      return kOk;
    };
  });

  // verify / question
  std::string which;
  auto search_command = [&](const char* name, const char* help, const char* choices) {
    auto* cmd = app.add_subcommand(name, help);
    cmd->add_option("which", which, choices)->required();
    cmd->add_option("--n", n, "vertex count");
    cmd->add_option("--shards", shards, "number of shards")->check(CLI::PositiveNumber);
    cmd->add_option("--shard-index", shard_index, "shard to run (0-based)")->check(CLI::NonNegativeNumber);
    cmd->add_option("--out", s.out, "write the report and witness CSV into this directory");
    add_common(cmd, s);
    return cmd;
  };
  auto* verify = search_command("verify", "check a theorem exhaustively at one n", "T2, T4, T5 or T6");
  verify->callback([&] {
    action = [&](RunManifest& m) {
      const SearchReport r = verify_theorem(n, parse_theorem_case(which), EnumOptions{shards, shard_index, thread_count(s.threads)});
      std::cout << r.to_text();
      report_files(r, s.out, "verify-" + r.subject + "-n" + std::to_string(n));
      m.add_summary("classes", std::to_string(r.classes));
      m.add_summary("violations", std::to_string(r.violations));
      return r.ok() ? kOk : kFound;
    };
  });
  auto* question = search_command("question", "search for DBE failures under a question's hypothesis", "Q1, Q2 or Q3");
  question->callback([&] {
    action = [&](RunManifest& m) {
      const SearchReport r = search_question(n, parse_question_case(which), EnumOptions{shards, shard_index, thread_count(s.threads)});
      std::cout << r.to_text();
      report_files(r, s.out, "question-" + r.subject + "-n" + std::to_string(n));
      m.add_summary("classes", std::to_string(r.classes));
      m.add_summary("counterexamples", std::to_string(r.violations));
      return r.ok() ? kOk : kFound;
    };
  });

  // verify-paper
  std::vector<std::string> only;
  std::string fixtures_dir;
  auto* vp = app.add_subcommand("verify-paper", "run the acceptance checks");
  vp->add_option("--only", only, "run only these checks (comma separated)")->delimiter(',');
  vp->add_option("--fixtures", fixtures_dir, "directory overriding F0.h3..F3.h3 and the distance table CSVs");
  vp->add_option("--out", s.out, "write one report per check into this directory");
  add_common(vp, s);
  vp->callback([&] {
    action = [&](RunManifest& m) {
      Fixtures fx = fixtures_dir.empty() ? Fixtures::builtin() : Fixtures::load(fixtures_dir);
      if (!fixtures_dir.empty())
        for (const auto& entry : fs::directory_iterator(fixtures_dir))
          if (entry.is_regular_file()) m.add_input(entry.path().string(), read_text_file(entry.path()));
      const ClaimResult* first_failure = nullptr;
      std::size_t passed = 0;
      std::string summary;
      const auto results = run_claims(fx, ClaimOptions{only, thread_count(s.threads)}, [&](const ClaimResult& r) {
        std::ostringstream line;
        line << (r.passed ? "PASS" : "FAIL") << " [" << r.info.criterion << "] " << r.info.id << ": " << r.info.title;
        std::cout << line.str() << '\n';
        if (!r.passed)
          for (const auto& d : r.details)
            if (d.starts_with("FAIL")) std::cout << "    " << d << '\n';
        summary += line.str() + "\n";
        if (!s.out.empty()) {
          std::string text = line.str() + "\n";
          for (const auto& d : r.details) text += d + "\n";
          write_text(fs::path(s.out) / (r.info.id + ".txt"), text);
        }
      });
      for (const auto& r : results) {
        if (r.passed) ++passed;
        else if (!first_failure) first_failure = &r;
      }
      if (!s.out.empty()) write_text(fs::path(s.out) / "summary.txt", summary);
      m.add_summary("passed", std::to_string(passed) + "/" + std::to_string(results.size()));
      if (first_failure) {
        std::cerr << "first failure: criterion " << first_failure->info.criterion << " (" << first_failure->info.id << ")\n";
        m.add_summary("first_failure", first_failure->info.id);
        return kFound;
      }
      return kOk;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  RunManifest manifest;
  manifest.command_line.assign(argv, argv + argc);
  manifest.version = LINELAB_VERSION;
  manifest.started = utc_timestamp();
  int code = kOk;
  try {
    code = action(manifest);
  } catch (const input_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    code = kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    code = kUsage;
  }
  manifest.finished = utc_timestamp();
  manifest.exit_code = code;
  try {
    if (s.manifest == "-") std::cerr << manifest.to_text();
    else if (!s.manifest.empty()) write_text(s.manifest, manifest.to_text());
    else if (!s.out.empty()) write_text(fs::path(s.out) / "manifest.txt", manifest.to_text());
    else std::cerr << manifest.to_text();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    if (code == kOk) code = kUsage;
  }
  return code;
}
