#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "fixtures.hpp"
#include "hgspq/errors.hpp"
#include "hgspq/render.hpp"
#include "json.hpp"

using namespace hgspq;
using namespace hgspq::testing;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST(Render, ParseFormat) {
  EXPECT_EQ(parse_format("json"), Format::Json);
  EXPECT_EQ(parse_format("csv"), Format::Csv);
  EXPECT_EQ(parse_format("table"), Format::Table);
  EXPECT_THROW(parse_format("xml"), DomainError);
}

TEST(Render, GoldenJson73) {
  const auto golden = slurp(HGSPQ_TEST_DATA "/report_7_3.json");
  ASSERT_FALSE(golden.empty());
  EXPECT_EQ(render(report_7_3(), Format::Json), golden);
}

TEST(Render, CsvShape) {
  const auto csv = render(report_7_3(), Format::Csv);
  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "structure_label,n_groups,rel_aut_order,n_hgs,acg,type,key");
  std::size_t rows = 0;
  while (std::getline(in, line)) ++rows;
  EXPECT_EQ(rows, 24u);
  EXPECT_NE(csv.find("C_7 ⋊ C_3,16,42,16,true,metabelian,\"e1T(1,1)\""), std::string::npos);
}

TEST(Render, TableSections) {
  const auto t = render(report_7_3(), Format::Table);
  EXPECT_NE(t.find("Cyclic type (12 classes)"), std::string::npos);
  EXPECT_NE(t.find("Non-abelian type (12 classes)"), std::string::npos);
  EXPECT_NE(t.find("Both types (6 classes)"), std::string::npos);
  EXPECT_NE(t.find("metabelian.e1T(1,1).n_groups"), std::string::npos);
}

TEST(Render, EmptyBothTypes) {
  ReportOptions ro;
  ro.metabelian = false;
  const auto r = build_report(7, 3, ro);
  EXPECT_TRUE(r.both_types.empty());
  const auto j = nlohmann::json::parse(render(r, Format::Json));
  EXPECT_TRUE(j["both_types"].is_array());
  EXPECT_TRUE(j["both_types"].empty());
  EXPECT_TRUE(j["metabelian"].empty());
  EXPECT_EQ(render(r, Format::Table).find("Both types"), std::string::npos);

  const auto u = nlohmann::json::parse(render(build_report(5, 3), Format::Json));
  EXPECT_TRUE(u["both_types"].empty());
  EXPECT_EQ(u["params"]["regime"], "unique");
}

TEST(Render, CountsAreStrings) {
  const auto j = nlohmann::json::parse(render(report_7_3(), Format::Json));
  for (const auto& r : j["metabelian"]) {
    EXPECT_TRUE(r["n_hgs"].is_string());
    EXPECT_TRUE(r["n_groups"].is_string());
    EXPECT_TRUE(r["rel_aut_order"].is_string());
  }
}

TEST(Render, VerificationBlock) {
  VerificationSummary v{"standard", {"x failed"}, {"w"}};
  const auto j = nlohmann::json::parse(render(report_7_3(), Format::Json, &v));
  EXPECT_EQ(j["verification"]["mode"], "standard");
  EXPECT_EQ(j["verification"]["failures"].size(), 1u);
  const auto t = render(report_7_3(), Format::Table, &v);
  EXPECT_NE(t.find("Verification (standard): FAIL"), std::string::npos);
}
