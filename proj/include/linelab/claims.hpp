#pragma once

#include <filesystem>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "linelab/hypergraph.hpp"

namespace linelab {

/// Inputs of the acceptance checks. The hypergraphs use the vertex labelings
/// of the family constructors; each table is CSV keyed by a table id.
struct Fixtures {
  Hypergraph f0{0};
  Hypergraph f1{0};
  Hypergraph f2{0};
  Hypergraph f3{0};
  std::map<std::string, std::string> tables;

  static Fixtures builtin();
  /// Built-in fixtures, with any of F0.h3 .. F3.h3 and <table id>.csv found
  /// in `dir` taking their place.
  static Fixtures load(const std::filesystem::path& dir);
  void write(const std::filesystem::path& dir) const;
};

struct DistanceTableInfo {
  std::string id;
  std::string host;     // "F1" or "F3"
  std::string removed;  // name of the vertex missing from the table
};

/// F1-minus-1, F1-minus-2, F1-minus-cd, F3-minus-a1, F3-minus-b1.
const std::vector<DistanceTableInfo>& distance_tables();

struct ClaimInfo {
  std::string id;
  int criterion = 0;
  std::string title;
};

/// f0, count113, f1, f23, fano, thm1, thm2, thm45, thm6, steiner, lemma1, oracle.
const std::vector<ClaimInfo>& claim_catalog();

struct ClaimResult {
  ClaimInfo info;
  bool passed = false;
  std::vector<std::string> details;
  double seconds = 0;
};

struct ClaimOptions {
  /// Empty means every claim.
  std::vector<std::string> only;
  int threads = 1;
};

/// Throws std::invalid_argument for an unknown id.
ClaimResult run_claim(std::string_view id, const Fixtures& fixtures, const ClaimOptions& options = {});
std::vector<ClaimResult> run_claims(const Fixtures& fixtures, const ClaimOptions& options = {},
                                    const std::function<void(const ClaimResult&)>& on_result = {});

}  // namespace linelab
