#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "linelab/hypergraph.hpp"

namespace linelab {

/// Malformed input text, with a 1-based position.
class parse_error : public std::runtime_error {
 public:
  parse_error(int line, int column, const std::string& message);
  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

// ".h3" text: a header line `n <count>`, then one `i j k` per hyperedge with
// 0 <= i < j < k < n. Blank lines and `#` comments are ignored; repeated
// triples are rejected.
Hypergraph parse_h3(std::string_view text);
std::string to_h3(const Hypergraph& h);

Hypergraph read_h3_file(const std::filesystem::path& path);
void write_h3_file(const std::filesystem::path& path, const Hypergraph& h);

/// Whole file as a string; throws std::runtime_error if unreadable.
std::string read_text_file(const std::filesystem::path& path);

}  // namespace linelab
