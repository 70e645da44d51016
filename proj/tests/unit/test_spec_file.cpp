#include <gtest/gtest.h>

#include <filesystem>

#include "fixtures.hpp"
#include "sumess/error.hpp"
#include "sumess/spec_file.hpp"

using namespace sumess;

namespace {

std::size_t error_line(const std::string& text) {
  try {
    parse_spec(text);
  } catch (const SpecParseError& e) {
    return e.line();
  }
  return static_cast<std::size_t>(-1);
}

}  // namespace

TEST(SpecFile, ParsesIntegerModule) {
  const auto p = parse_spec("# comment\nname = Z8+Z2\nmoduli = [8, 2]\naction.kind = integers\n");
  EXPECT_EQ(p.name, "Z8+Z2");
  EXPECT_EQ(p.moduli, (std::vector<std::uint32_t>{8, 2}));
  EXPECT_TRUE(std::holds_alternative<IntegerAction>(p.action));
}

TEST(SpecFile, ParsesMultiLineGenerators) {
  const auto p = fixtures::spec("m2f2_regular");
  EXPECT_EQ(p.name, "M2(F2)");
  const auto& g = std::get<GeneratedAction>(p.action).generators;
  ASSERT_EQ(g.size(), 4u);
  EXPECT_EQ(g[1][0][2], 1);
}

TEST(SpecFile, QuotedTextValues) {
  const auto p = parse_spec("name = \"A # B\"\nmoduli = [3]\naction.kind = \"integers\"\n");
  EXPECT_EQ(p.name, "A # B");
}

TEST(SpecFile, RoundTrip) {
  for (const char* stem : {"z8z2", "m2f2_regular", "t2f2_column_top"}) {
    const auto p = fixtures::spec(stem);
    const auto q = parse_spec(format_spec(p));
    EXPECT_EQ(q.name, p.name);
    EXPECT_EQ(q.moduli, p.moduli);
    EXPECT_EQ(q.action.index(), p.action.index());
    if (const auto* g = std::get_if<GeneratedAction>(&p.action)) {
      EXPECT_EQ(std::get<GeneratedAction>(q.action).generators, g->generators);
    }
  }
}

TEST(SpecFile, ErrorsCarryLineNumbers) {
  EXPECT_EQ(error_line("name = x\nmoduli = [2]\nbogus = 1\naction.kind = integers\n"), 3u);
  EXPECT_EQ(error_line("name = x\nname = y\nmoduli = [2]\naction.kind = integers\n"), 2u);
  EXPECT_EQ(error_line("name = x\nmoduli = [2, 1]\naction.kind = integers\n"), 2u);
  EXPECT_EQ(error_line("name = x\nmoduli = [2]\naction.kind = rings\n"), 3u);
  EXPECT_EQ(error_line("name = x\nmoduli = [2]\naction.kind = generated\n"), 3u);
  EXPECT_EQ(error_line("name = x\nmoduli = [2]\naction.kind = integers\naction.generators = [[[1]]]\n"), 4u);
  EXPECT_EQ(error_line("name = x\nmoduli = [4, 2]\naction.kind = generated\naction.generators = [[[1,1],[0,1]]]\n"),
            4u);
  EXPECT_EQ(error_line("name = x\nmoduli = [2\naction.kind = integers\n"), 2u);
  EXPECT_EQ(error_line("name = x\nmoduli = 2\naction.kind = integers\n"), 2u);
  EXPECT_EQ(error_line("just text\n"), 1u);
}

TEST(SpecFile, MissingKeyIsReported) {
  try {
    parse_spec("name = x\naction.kind = integers\n");
    FAIL();
  } catch (const SpecParseError& e) {
    EXPECT_NE(std::string(e.what()).find("moduli"), std::string::npos);
  }
}

TEST(SpecFile, MissingFileIsAParseError) {
  EXPECT_THROW(load_spec_file("/nonexistent/nowhere.spec"), SpecParseError);
}

TEST(SpecFile, ShippedSpecsBuild) {
  for (const auto& entry : std::filesystem::directory_iterator(SUMESS_SPEC_DIR)) {
    if (entry.path().extension() != ".spec") continue;
    EXPECT_NO_THROW(FiniteModule::build(load_spec_file(entry.path()))) << entry.path();
  }
}
