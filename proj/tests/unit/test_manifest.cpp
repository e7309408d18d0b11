#include <gtest/gtest.h>

#include <regex>

#include "linelab/manifest.hpp"

using namespace linelab;

TEST(Fnv1a, KnownValues) {
  EXPECT_EQ(fnv1a_hex(""), "cbf29ce484222325");
  EXPECT_EQ(fnv1a_hex("a"), "af63dc4c8601ec8c");
  EXPECT_EQ(fnv1a_hex("foobar"), "85944171f73967e8");
}

TEST(Timestamp, Format) {
  EXPECT_TRUE(std::regex_match(utc_timestamp(), std::regex(R"(\d{4}-\d{2}-\d{2}T\d{2}:\d{2}:\d{2}Z)")));
}

TEST(RunManifest, Text) {
  RunManifest m;
  m.command_line = {"linelab", "lines", "x.h3"};
  m.version = "1.2.3";
  m.started = "2020-01-01T00:00:00Z";
  m.finished = "2020-01-01T00:00:01Z";
  m.add_input("x.h3", "n 3\n");
  m.add_summary("lines", "3");
  m.exit_code = 1;
  const std::string text = m.to_text();
  EXPECT_NE(text.find("command=linelab lines x.h3\n"), std::string::npos);
  EXPECT_NE(text.find("version=1.2.3\n"), std::string::npos);
  EXPECT_NE(text.find("input=x.h3 fnv1a:" + fnv1a_hex("n 3\n") + "\n"), std::string::npos);
  EXPECT_NE(text.find("result.lines=3\n"), std::string::npos);
  EXPECT_NE(text.find("exit_code=1\n"), std::string::npos);
  EXPECT_LT(text.find("started="), text.find("finished="));
}
