#pragma once

#include <cstdint>
#include <functional>
#include <initializer_list>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "linelab/canonical.hpp"
#include "linelab/families.hpp"
#include "linelab/hypergraph.hpp"

namespace linelab {

using HypergraphPredicate = std::function<bool(const Hypergraph&)>;

struct EnumFilter {
  /// Bit i set: a 4-subset may induce exactly i hyperedges.
  std::uint8_t four_count_allowed = 0x1F;
  /// Must be closed under induced sub-hypergraphs; applied at every level.
  std::vector<HypergraphPredicate> hereditary;
  /// Applied only to the hypergraphs of the requested order.
  std::vector<HypergraphPredicate> final_checks;
  std::string description = "none";

  static EnumFilter four_counts(std::initializer_list<int> allowed);
  bool allows_four_count(int count) const noexcept { return ((four_count_allowed >> count) & 1U) != 0; }
  bool prunes() const noexcept { return (four_count_allowed & 0x1F) != 0x1F || !hereditary.empty(); }
  bool accepts(const Hypergraph& h) const;
};

struct EnumOptions {
  /// The last level is split by parent index: shard s takes parents
  /// s, s + shards, s + 2 shards, ...
  int shards = 1;
  int shard_index = 0;
  int threads = 1;
};

/// Visits one canonical representative per isomorphism class of 3-uniform
/// hypergraphs on n vertices passing `filter`. Order is fixed: parents in
/// level order, children in subset order. Throws unsupported_size for n > 8,
/// or n = 8 without a pruning filter.
std::uint64_t enumerate_canonical(int n, const EnumFilter& filter, const std::function<void(const CanonicalForm&)>& visit,
                                  const EnumOptions& options = {});
/// Sorted by CanonicalForm order.
std::vector<CanonicalForm> enumerate_canonical(int n, const EnumFilter& filter = {}, const EnumOptions& options = {});

/// Sorted union of shard outputs.
std::vector<CanonicalForm> merge_forms(const std::vector<std::vector<CanonicalForm>>& parts);

/// Non-pseudometric hypergraphs on n vertices all of whose (n-1)-vertex
/// induced sub-hypergraphs are pseudometric, sorted. Requires n <= 6.
std::vector<CanonicalForm> minimal_non_pseudometric(int n, const EnumOptions& options = {});

/// F1, F2, F3 and the minimal non-pseudometric forms on 3..6 vertices.
const std::set<CanonicalForm>& known_nonmetric_cache();

enum class TheoremCase { T2, T4, T5, T6 };
enum class QuestionCase { Q1, Q2, Q3 };

std::string to_string(TheoremCase c);
std::string to_string(QuestionCase c);
TheoremCase parse_theorem_case(std::string_view text);
QuestionCase parse_question_case(std::string_view text);
EnumFilter hypothesis_filter(TheoremCase c);
EnumFilter hypothesis_filter(QuestionCase c);

struct Witness {
  CanonicalForm form;
  std::string kind;  // violation tag, "dbe-failure" or "equality"
  std::uint64_t lines = 0;
  std::string family;
};

struct SearchReport {
  std::string subject;
  int n = 0;
  std::string filter;
  std::uint64_t classes = 0;
  std::uint64_t violations = 0;
  std::uint64_t dbe_failures = 0;
  std::map<std::string, std::uint64_t> equality_cases;
  std::vector<Witness> witnesses;
  /// Excluded from to_text() so reports compare byte for byte.
  double seconds = 0;

  bool ok() const noexcept { return violations == 0; }
  std::string to_text() const;
  std::string witnesses_csv() const;
};

/// Exhaustive check of a theorem's conclusion over all classes on n
/// vertices satisfying its hypothesis; requires 2 <= n <= 7.
SearchReport verify_theorem(int n, TheoremCase which, const EnumOptions& options = {});
/// Reports DBE failures among classes satisfying the question's hypothesis.
/// Requires 2 <= n <= 7 (n <= 6 for Q1).
SearchReport search_question(int n, QuestionCase which, const EnumOptions& options = {});

}  // namespace linelab
