#include "linelab/manifest.hpp"

#include <chrono>
#include <ctime>
#include <sstream>

namespace linelab {

std::string fnv1a_hex(std::string_view data) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : data) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i, h >>= 4) out[static_cast<std::size_t>(i)] = kHex[h & 0xF];
  return out;
}

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::string RunManifest::to_text() const {
  std::ostringstream out;
  out << "command=";
  for (std::size_t i = 0; i < command_line.size(); ++i) out << (i ? " " : "") << command_line[i];
  out << "\nversion=" << version << '\n';
  for (const auto& [path, hash] : input_hashes) out << "input=" << path << " fnv1a:" << hash << '\n';
  out << "started=" << started << "\nfinished=" << finished << '\n';
  for (const auto& [key, value] : summary) out << "result." << key << '=' << value << '\n';
  out << "exit_code=" << exit_code << '\n';
  return out.str();
}

}  // namespace linelab
