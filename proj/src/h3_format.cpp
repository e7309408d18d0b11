#include "linelab/h3_format.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

namespace linelab {
namespace {

struct Token {
  std::string_view text;
  int column;
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    if (i >= line.size()) break;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    out.push_back(Token{line.substr(start, i - start), static_cast<int>(start) + 1});
  }
  return out;
}

int parse_int(const Token& tok, int line_no) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(tok.text.data(), tok.text.data() + tok.text.size(), value);
  if (ec != std::errc{} || ptr != tok.text.data() + tok.text.size())
    throw parse_error(line_no, tok.column, "expected an integer, got '" + std::string(tok.text) + "'");
  return value;
}

}  // namespace

parse_error::parse_error(int line, int column, const std::string& message)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

Hypergraph parse_h3(std::string_view text) {
  int n = -1;
  std::vector<Triple> edges;
  std::vector<bool> seen;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    std::string_view raw = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (const auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    const auto tokens = tokenize(raw);
    if (tokens.empty()) {
      if (end == text.size()) break;
      continue;
    }
    if (n < 0) {
      if (tokens[0].text != "n") throw parse_error(line_no, tokens[0].column, "expected header 'n <count>'");
      if (tokens.size() != 2) throw parse_error(line_no, tokens[0].column, "header must be 'n <count>'");
      n = parse_int(tokens[1], line_no);
      if (n < 0 || n > kMaxVertices) throw parse_error(line_no, tokens[1].column, "vertex count must be in 0..64");
      seen.assign(static_cast<std::size_t>(binomial(n, 3)), false);
    } else {
      if (tokens.size() != 3)
        throw parse_error(line_no, tokens[0].column, "expected a triple 'i j k', got " + std::to_string(tokens.size()) + " fields");
      int v[3];
      for (int k = 0; k < 3; ++k) {
        v[k] = parse_int(tokens[static_cast<std::size_t>(k)], line_no);
        if (v[k] < 0 || v[k] >= n)
          throw parse_error(line_no, tokens[static_cast<std::size_t>(k)].column, "vertex out of range 0.." + std::to_string(n - 1));
        if (k > 0 && v[k] <= v[k - 1])
          throw parse_error(line_no, tokens[static_cast<std::size_t>(k)].column, "triple must be strictly increasing");
      }
      const Triple t{v[0], v[1], v[2]};
      const std::size_t r = triple_rank(t);
      if (seen[r]) throw parse_error(line_no, tokens[0].column, "repeated triple");
      seen[r] = true;
      edges.push_back(t);
    }
    if (end == text.size()) break;
  }
  if (n < 0) throw parse_error(line_no, 1, "missing header 'n <count>'");
  return Hypergraph(n, edges);
}

std::string to_h3(const Hypergraph& h) {
  std::ostringstream out;
  out << "n " << h.order() << '\n';
  for (const Triple& t : h.edges()) out << t.a << ' ' << t.b << ' ' << t.c << '\n';
  return out.str();
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Hypergraph read_h3_file(const std::filesystem::path& path) { return parse_h3(read_text_file(path)); }

void write_h3_file(const std::filesystem::path& path, const Hypergraph& h) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << to_h3(h);
}

}  // namespace linelab
