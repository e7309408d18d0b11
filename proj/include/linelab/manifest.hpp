#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace linelab {

/// 64-bit FNV-1a, as 16 lowercase hex digits.
std::string fnv1a_hex(std::string_view data);
/// Current UTC time as YYYY-MM-DDTHH:MM:SSZ.
std::string utc_timestamp();

struct RunManifest {
  std::vector<std::string> command_line;
  std::vector<std::pair<std::string, std::string>> input_hashes;  // (path, fnv1a)
  std::string version;
  std::string started;
  std::string finished;
  std::vector<std::pair<std::string, std::string>> summary;
  int exit_code = 0;

  void add_input(const std::string& path, std::string_view contents) { input_hashes.emplace_back(path, fnv1a_hex(contents)); }
  void add_summary(std::string key, std::string value) { summary.emplace_back(std::move(key), std::move(value)); }
  std::string to_text() const;
};

}  // namespace linelab
