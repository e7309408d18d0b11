#include <gtest/gtest.h>

#include <filesystem>

#include "helpers.hpp"
#include "linelab/families.hpp"
#include "linelab/h3_format.hpp"

using namespace linelab;

namespace {

void expect_parse_error(std::string_view text, int line, int column) {
  try {
    parse_h3(text);
    ADD_FAILURE() << "accepted: " << text;
  } catch (const parse_error& e) {
    EXPECT_EQ(e.line(), line) << e.what();
    EXPECT_EQ(e.column(), column) << e.what();
  }
}

}  // namespace

TEST(H3, ParsesCommentsAndBlankLines) {
  const Hypergraph h = parse_h3("# demo\n\nn 5\n0 1 2   # first\n\n2 3 4\n");
  EXPECT_EQ(h, Hypergraph(5, {Triple{0, 1, 2}, Triple{2, 3, 4}}));
}

TEST(H3, EmptyEdgeList) { EXPECT_EQ(parse_h3("n 3\n"), Hypergraph(3)); }

TEST(H3, ErrorsCarryPositions) {
  expect_parse_error("", 1, 1);
  expect_parse_error("m 4\n", 1, 1);
  expect_parse_error("n 4\n0 1 7\n", 2, 5);
  expect_parse_error("n 4\n0 2 1\n", 2, 5);
  expect_parse_error("n 4\n0 1\n", 2, 1);
  expect_parse_error("n 4\n0 1 2\n0 1 2\n", 3, 1);
  expect_parse_error("n 4\n0 x 2\n", 2, 3);
  expect_parse_error("n 99\n", 1, 3);
}

TEST(H3, RoundTrip) {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 50; ++trial) {
    const Hypergraph h = test_support::random_hypergraph(rng, static_cast<int>(rng() % 12));
    EXPECT_EQ(parse_h3(to_h3(h)), h);
  }
  EXPECT_EQ(parse_h3(to_h3(make_F0())), make_F0());
}

TEST(H3, FileRoundTrip) {
  const auto path = std::filesystem::temp_directory_path() / "linelab_h3_roundtrip.h3";
  write_h3_file(path, make_F1());
  EXPECT_EQ(read_h3_file(path), make_F1());
  std::filesystem::remove(path);
  EXPECT_THROW(read_h3_file(path), std::runtime_error);
}
