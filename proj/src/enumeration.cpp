#include "linelab/enumeration.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <unordered_set>

#include "linelab/betweenness.hpp"

namespace linelab {
namespace {

// Children of one parent on m vertices: the new vertex is m and the new
// triples are {x, y, m} for a subset S of the parent's pairs. Those triples
// occupy ranks C(m,3) .. C(m+1,3)-1, so the child mask is parent | S << C(m,3).
class Augmenter {
 public:
  Augmenter(int m, const EnumFilter& filter, bool last) : m_(m), filter_(filter), last_(last) {
    base_ = static_cast<int>(binomial(m, 3));
    pairs_ = static_cast<int>(binomial(m, 2));
    check_four_ = (filter.four_count_allowed & 0x1F) != 0x1F;
    quads_.resize(static_cast<std::size_t>(pairs_));
    for (int z = 1; z < m; ++z)
      for (int y = 0; y < z; ++y) {
        auto& list = quads_[pair_rank(y, z)];
        for (int x = 0; x < y; ++x)
          list.push_back(Quad{static_cast<int>(triple_rank(Triple{x, y, z})), static_cast<int>(pair_rank(x, y)),
                              static_cast<int>(pair_rank(x, z))});
      }
  }

  void expand(std::uint64_t parent, std::vector<std::uint64_t>& out) {
    parent_ = parent;
    seen_.clear();
    out_ = &out;
    descend(0, 0);
  }

 private:
  struct Quad {
    int parent_triple;
    int pair_xy;
    int pair_xz;
  };

  void descend(int r, std::uint64_t chosen) {
    if (r == pairs_) {
      leaf(chosen);
      return;
    }
    for (int bit = 0; bit < 2; ++bit) {
      const std::uint64_t next = chosen | (static_cast<std::uint64_t>(bit) << r);
      if (check_four_ && !four_ok(r, next)) continue;
      descend(r + 1, next);
    }
  }

  bool four_ok(int r, std::uint64_t chosen) const {
    const int yz = static_cast<int>((chosen >> r) & 1U);
    for (const Quad& q : quads_[static_cast<std::size_t>(r)]) {
      const int count = yz + static_cast<int>((parent_ >> q.parent_triple) & 1U) + static_cast<int>((chosen >> q.pair_xy) & 1U) +
                        static_cast<int>((chosen >> q.pair_xz) & 1U);
      if (!filter_.allows_four_count(count)) return false;
    }
    return true;
  }

  void leaf(std::uint64_t chosen) {
    const int n = m_ + 1;
    const std::uint64_t mask = parent_ | (chosen << base_);
    const CanonicalLabeling lab = canonical_labeling(n, mask);
    if (((lab.last_orbit >> m_) & 1U) == 0) return;
    if (!seen_.insert(lab.bits).second) return;
    if (!filter_.hereditary.empty() || (last_ && !filter_.final_checks.empty())) {
      const Hypergraph h = Hypergraph::from_mask(n, lab.bits);
      for (const auto& pred : filter_.hereditary)
        if (!pred(h)) return;
      if (last_)
        for (const auto& pred : filter_.final_checks)
          if (!pred(h)) return;
    }
    out_->push_back(lab.bits);
  }

  int m_;
  const EnumFilter& filter_;
  bool last_;
  int base_ = 0;
  int pairs_ = 0;
  bool check_four_ = false;
  std::vector<std::vector<Quad>> quads_;
  std::uint64_t parent_ = 0;
  std::unordered_set<std::uint64_t> seen_;
  std::vector<std::uint64_t>* out_ = nullptr;
};

// Expands the selected parents, handing each parent's children to `sink` in
// parent order regardless of the thread count.
void expand_level(int m, const std::vector<std::uint64_t>& parents, const std::vector<std::size_t>& selected, const EnumFilter& filter,
                  bool last, int threads, const std::function<void(const std::vector<std::uint64_t>&)>& sink) {
  if (threads <= 1 || selected.size() < 2) {
    Augmenter aug(m, filter, last);
    std::vector<std::uint64_t> children;
    for (std::size_t idx : selected) {
      children.clear();
      aug.expand(parents[idx], children);
      sink(children);
    }
    return;
  }
  const std::size_t block = static_cast<std::size_t>(threads) * 16;
  std::vector<std::vector<std::uint64_t>> results;
  for (std::size_t start = 0; start < selected.size(); start += block) {
    const std::size_t end = std::min(selected.size(), start + block);
    results.assign(end - start, {});
    std::atomic<std::size_t> next{start};
    {
      std::vector<std::jthread> pool;
      for (int t = 0; t < threads; ++t)
        pool.emplace_back([&]() {
          Augmenter aug(m, filter, last);
          for (std::size_t i = next++; i < end; i = next++) aug.expand(parents[selected[i]], results[i - start]);
        });
    }
    for (const auto& children : results) sink(children);
  }
}

void validate_regime(int n, const EnumFilter& filter, const EnumOptions& options) {
  if (n < 0) throw std::invalid_argument("vertex count must be non-negative");
  if (n > kMaxCanonicalVertices) throw unsupported_size("enumeration supports at most 8 vertices");
  if (n == kMaxCanonicalVertices && !filter.prunes())
    throw unsupported_size("enumeration on 8 vertices needs a pruning hereditary filter");
  if (options.shards < 1 || options.shard_index < 0 || options.shard_index >= options.shards)
    throw std::invalid_argument("shard index must lie in 0 .. shards-1");
}

std::string four_count_text(std::uint8_t allowed) {
  std::string out = "{";
  for (int i = 0; i <= 4; ++i)
    if ((allowed >> i) & 1U) {
      if (out.size() > 1) out += ',';
      out += std::to_string(i);
    }
  return out + "}";
}

}  // namespace

EnumFilter EnumFilter::four_counts(std::initializer_list<int> allowed) {
  EnumFilter f;
  f.four_count_allowed = 0;
  for (int c : allowed) {
    if (c < 0 || c > 4) throw std::invalid_argument("four-vertex edge counts lie in 0..4");
    f.four_count_allowed = static_cast<std::uint8_t>(f.four_count_allowed | (1U << c));
  }
  f.description = "four-counts" + four_count_text(f.four_count_allowed);
  return f;
}

bool EnumFilter::accepts(const Hypergraph& h) const {
  if ((four_count_allowed & 0x1F) != 0x1F && h.order() >= 4) {
    const FourProfile p = four_profile(h);
    for (int i = 0; i <= 4; ++i)
      if (p.counts[static_cast<std::size_t>(i)] != 0 && !allows_four_count(i)) return false;
  }
  for (const auto& pred : hereditary)
    if (!pred(h)) return false;
  for (const auto& pred : final_checks)
    if (!pred(h)) return false;
  return true;
}

std::uint64_t enumerate_canonical(int n, const EnumFilter& filter, const std::function<void(const CanonicalForm&)>& visit,
                                  const EnumOptions& options) {
  validate_regime(n, filter, options);
  const int threads = std::max(1, options.threads);
  std::vector<std::uint64_t> level{0};
  for (int m = 0; m + 1 < n; ++m) {
    std::vector<std::size_t> all(level.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    std::vector<std::uint64_t> next;
    expand_level(m, level, all, filter, false, threads,
                 [&](const std::vector<std::uint64_t>& children) { next.insert(next.end(), children.begin(), children.end()); });
    level = std::move(next);
  }
  if (n == 0) {
    if (options.shard_index != 0) return 0;
    const Hypergraph empty(0);
    for (const auto& pred : filter.hereditary)
      if (!pred(empty)) return 0;
    for (const auto& pred : filter.final_checks)
      if (!pred(empty)) return 0;
    visit(CanonicalForm{0, 0});
    return 1;
  }
  std::vector<std::size_t> mine;
  for (std::size_t i = static_cast<std::size_t>(options.shard_index); i < level.size(); i += static_cast<std::size_t>(options.shards))
    mine.push_back(i);
  std::uint64_t count = 0;
  expand_level(n - 1, level, mine, filter, true, threads, [&](const std::vector<std::uint64_t>& children) {
    for (std::uint64_t bits : children) {
      visit(CanonicalForm{n, bits});
      ++count;
    }
  });
  return count;
}

std::vector<CanonicalForm> enumerate_canonical(int n, const EnumFilter& filter, const EnumOptions& options) {
  std::vector<CanonicalForm> out;
  enumerate_canonical(n, filter, [&](const CanonicalForm& f) { out.push_back(f); }, options);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<CanonicalForm> merge_forms(const std::vector<std::vector<CanonicalForm>>& parts) {
  std::vector<CanonicalForm> out;
  for (const auto& part : parts) out.insert(out.end(), part.begin(), part.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<CanonicalForm> minimal_non_pseudometric(int n, const EnumOptions& options) {
  if (n < 0 || n > 6) throw unsupported_size("minimal non-pseudometric search supports at most 6 vertices");
  EnumFilter filter;
  filter.description = "minimal-non-pseudometric";
  filter.final_checks.push_back([](const Hypergraph& h) {
    if (is_pseudometric(h)) return false;
    const VertexSet all = all_vertices(h.order());
    for (int v = 0; v < h.order(); ++v)
      if (!is_pseudometric(induced(h, all & ~(VertexSet{1} << v)))) return false;
    return true;
  });
  return enumerate_canonical(n, filter, options);
}

const std::set<CanonicalForm>& known_nonmetric_cache() {
  static const std::set<CanonicalForm> cache = [] {
    std::set<CanonicalForm> out{canonical_form(make_F1()), canonical_form(make_F2()), canonical_form(make_F3())};
    for (int n = 3; n <= 6; ++n)
      for (const auto& f : minimal_non_pseudometric(n)) out.insert(f);
    return out;
  }();
  return cache;
}

std::string to_string(TheoremCase c) {
  switch (c) {
    case TheoremCase::T2: return "T2";
    case TheoremCase::T4: return "T4";
    case TheoremCase::T5: return "T5";
    case TheoremCase::T6: return "T6";
  }
  return "?";
}

std::string to_string(QuestionCase c) {
  switch (c) {
    case QuestionCase::Q1: return "Q1";
    case QuestionCase::Q2: return "Q2";
    case QuestionCase::Q3: return "Q3";
  }
  return "?";
}

TheoremCase parse_theorem_case(std::string_view text) {
  for (auto c : {TheoremCase::T2, TheoremCase::T4, TheoremCase::T5, TheoremCase::T6})
    if (text == to_string(c)) return c;
  throw std::invalid_argument("unknown theorem '" + std::string(text) + "' (expected T2, T4, T5 or T6)");
}

QuestionCase parse_question_case(std::string_view text) {
  for (auto c : {QuestionCase::Q1, QuestionCase::Q2, QuestionCase::Q3})
    if (text == to_string(c)) return c;
  throw std::invalid_argument("unknown question '" + std::string(text) + "' (expected Q1, Q2 or Q3)");
}

EnumFilter hypothesis_filter(TheoremCase c) {
  switch (c) {
    case TheoremCase::T2: return EnumFilter::four_counts({0, 1, 3, 4});
    case TheoremCase::T4: return EnumFilter::four_counts({0, 2, 4});
    case TheoremCase::T5:
    case TheoremCase::T6: return EnumFilter::four_counts({0, 1, 2, 3});
  }
  throw std::invalid_argument("unknown theorem");
}

EnumFilter hypothesis_filter(QuestionCase c) {
  switch (c) {
    case QuestionCase::Q1: {
      EnumFilter f;
      f.hereditary.push_back([](const Hypergraph& h) { return is_pseudometric(h); });
      f.description = "pseudometric";
      return f;
    }
    case QuestionCase::Q2: return EnumFilter::four_counts({2, 3, 4});
    case QuestionCase::Q3: return EnumFilter::four_counts({1, 2, 4});
  }
  throw std::invalid_argument("unknown question");
}

std::string SearchReport::to_text() const {
  std::ostringstream out;
  out << "subject=" << subject << '\n';
  out << "n=" << n << '\n';
  out << "hypothesis=" << filter << '\n';
  out << "classes=" << classes << '\n';
  out << "violations=" << violations << '\n';
  out << "dbe_failures=" << dbe_failures << '\n';
  for (const auto& [family, count] : equality_cases) out << "equality." << family << '=' << count << '\n';
  out << "witnesses=" << witnesses.size() << '\n';
  if (subject.starts_with("Q"))
    out << "verdict=" << (violations == 0 ? "no-counterexample-at-this-n" : "counterexample-found") << '\n';
  else
    out << "verdict=" << (violations == 0 ? "holds-at-this-n" : "violated") << '\n';
  return out.str();
}

std::string SearchReport::witnesses_csv() const {
  std::ostringstream out;
  out << "form,kind,lines,family\n";
  for (const auto& w : witnesses) out << w.form.str() << ',' << w.kind << ',' << w.lines << ',' << w.family << '\n';
  return out.str();
}

SearchReport verify_theorem(int n, TheoremCase which, const EnumOptions& options) {
  if (n < 2) throw std::invalid_argument("theorem checks need at least 2 vertices");
  if (n > 7) throw unsupported_size("theorem checks support at most 7 vertices");
  const auto start = std::chrono::steady_clock::now();
  const EnumFilter filter = hypothesis_filter(which);
  SearchReport report;
  report.subject = to_string(which);
  report.n = n;
  report.filter = filter.description;
  const VertexSet all = all_vertices(n);
  enumerate_canonical(
      n, filter,
      [&](const CanonicalForm& form) {
        const Hypergraph h = decode(form);
        const auto lines = all_lines(h);
        const std::uint64_t m = lines.size();
        const bool whole = std::find(lines.begin(), lines.end(), all) != lines.end();
        const bool dbe = whole || m >= static_cast<std::uint64_t>(n);
        ++report.classes;
        if (!dbe) ++report.dbe_failures;
        auto flag = [&](const std::string& kind, const std::string& family) {
          ++report.violations;
          report.witnesses.push_back(Witness{form, kind, m, family});
        };
        switch (which) {
          case TheoremCase::T2: {
            const FamilyTag tag = n >= 3 ? recognize_family(h) : FamilyTag{};
            const bool equality = !whole && m == static_cast<std::uint64_t>(n);
            if (!whole && m < static_cast<std::uint64_t>(n)) flag("fewer-lines-than-vertices", tag.str());
            if (equality) {
              ++report.equality_cases[tag.str()];
              if (tag.family == Family::None) flag("equality-without-family", tag.str());
              else report.witnesses.push_back(Witness{form, "equality", m, tag.str()});
            }
            if (tag.family != Family::None && !equality) flag("family-without-equality", tag.str());
            break;
          }
          case TheoremCase::T4:
          case TheoremCase::T5:
            if (!dbe) flag("dbe-failure", "");
            break;
          case TheoremCase::T6: {
            const std::uint64_t cube = static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(n);
            if (27 * m * m < cube) flag("below-line-bound", "");
            break;
          }
        }
      },
      options);
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

SearchReport search_question(int n, QuestionCase which, const EnumOptions& options) {
  if (n < 2) throw std::invalid_argument("question searches need at least 2 vertices");
  if (n > 7 || (which == QuestionCase::Q1 && n > 6)) throw unsupported_size("question search size limit exceeded");
  const auto start = std::chrono::steady_clock::now();
  const EnumFilter filter = hypothesis_filter(which);
  SearchReport report;
  report.subject = to_string(which);
  report.n = n;
  report.filter = filter.description;
  enumerate_canonical(
      n, filter,
      [&](const CanonicalForm& form) {
        const Hypergraph h = decode(form);
        ++report.classes;
        if (has_dbe_property(h)) return;
        ++report.dbe_failures;
        ++report.violations;
        report.witnesses.push_back(Witness{form, "dbe-failure", all_lines(h).size(), ""});
      },
      options);
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace linelab
