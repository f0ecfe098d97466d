#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <sstream>

#include "copula_transport/copula.hpp"
#include "copula_transport/error.hpp"
#include "copula_transport/io.hpp"
#include "copula_transport/rng.hpp"
#include "support.hpp"

using namespace copula_transport;

TEST(Panel, ValidatesShapeAndValues) {
  EXPECT_THROW(Panel(1, 1, {0.0}), DataError);
  EXPECT_THROW(Panel(2, 0, {}), DataError);
  EXPECT_THROW(Panel(2, 2, {1.0, 2.0, 3.0}), DataError);
  try {
    Panel(3, 2, {1.0, 2.0, 3.0, 4.0, std::nan(""), 6.0});
    FAIL() << "NaN accepted";
  } catch (const DataError& e) {
    const std::string what = e.what();
    EXPECT_NE(what.find("row 2"), std::string::npos) << what;
    EXPECT_NE(what.find("column 2"), std::string::npos) << what;
  }
  EXPECT_THROW(Panel(2, 1, {1.0, std::numeric_limits<double>::infinity()}), DataError);
}

TEST(Panel, ColumnsAndStacking) {
  const Panel p = Panel::from_columns({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}}, "p");
  EXPECT_EQ(p.length(), 3u);
  EXPECT_EQ(p.at(2, 1), 6.0);
  const Panel tail = p.columns(1, 2);
  EXPECT_EQ(tail.dimension(), 2u);
  EXPECT_EQ(tail.at(0, 0), 4.0);
  const Panel stacked = hstack(p.columns(0, 1), tail);
  EXPECT_EQ(stacked.values().size(), 9u);
  EXPECT_TRUE(std::ranges::equal(stacked.values(), p.values()));
  EXPECT_THROW(hstack(p, Panel::from_columns({{1, 2}})), DataError);
}

TEST(Csv, ParsesHeaderAndRows) {
  const auto csv = parse_panel_csv("a, b\n1,2\n\n3.5,-4e-3\r\n5,6\n", "mem");
  EXPECT_EQ(csv.header, (std::vector<std::string>{"a", "b"}));
  EXPECT_EQ(csv.panel.length(), 3u);
  EXPECT_EQ(csv.panel.at(1, 1), -4e-3);
  EXPECT_EQ(csv.panel.series_id(), "mem");
}

TEST(Csv, RaggedRowNamesSourceAndLine) {
  try {
    parse_panel_csv("x,y\n1,2\n3\n", "data.csv");
    FAIL();
  } catch (const DataError& e) {
    EXPECT_NE(std::string(e.what()).find("data.csv:3"), std::string::npos) << e.what();
  }
}

TEST(Csv, NonNumericCellNamesSourceAndLine) {
  try {
    parse_panel_csv("x,y\n1,2\n3,4\n5,abc\n", "data.csv");
    FAIL();
  } catch (const DataError& e) {
    const std::string what = e.what();
    EXPECT_NE(what.find("data.csv:4"), std::string::npos) << what;
    EXPECT_NE(what.find("abc"), std::string::npos) << what;
  }
  EXPECT_THROW(parse_panel_csv("x\n1\n2,\n", "s"), DataError);
  EXPECT_THROW(parse_panel_csv("x\n1\n\n", "s"), DataError);
  EXPECT_THROW(parse_panel_csv("", "s"), DataError);
  EXPECT_THROW(parse_panel_csv("x\n1\nnan\n", "s"), DataError);
}

TEST(Csv, WriteThenParseIsExact) {
  Philox4x32 rng(4, 0);
  std::vector<double> values(300);
  for (double& v : values) v = (rng.uniform() - 0.5) * std::pow(10.0, rng.below(20) - 10.0);
  const Panel p(100, 3, values);
  std::ostringstream out;
  write_panel_csv(out, default_header(3), p);
  const auto back = parse_panel_csv(out.str(), "round");
  EXPECT_EQ(back.header, default_header(3));
  EXPECT_TRUE(std::ranges::equal(back.panel.values(), p.values()));
}

TEST(FormatDouble, ShortestRoundTrip) {
  EXPECT_EQ(format_double(0.1), "0.1");
  EXPECT_EQ(format_double(1.0), "1");
  EXPECT_EQ(format_double(0.25), "0.25");
  EXPECT_EQ(format_double(1.0 / 3.0), "0.3333333333333333");
}

TEST(Json, SignatureRoundTripIsExact) {
  Philox4x32 rng(8, 0);
  for (int rep = 0; rep < 20; ++rep) {
    const Signature s = test_support::random_signature(rng, 3, 7, 12);
    const Json json = Json::parse(signature_to_json(s).dump());
    EXPECT_EQ(signature_from_json(json), s);
  }
}

TEST(Json, SignatureLayout) {
  const Signature s = monotone_signature(2, std::vector<int>{1, 1});
  const Json json = signature_to_json(s);
  EXPECT_EQ(json.dump(),
            R"({"dimension":2,"resolution":2,"atoms":[[[0.25,0.25],0.5],[[0.75,0.75],0.5]]})");
}

TEST(Json, MalformedSignaturesAreDataErrors) {
  EXPECT_THROW(signature_from_json(Json::parse(R"({"dimension":2})")), DataError);
  EXPECT_THROW(signature_from_json(Json::parse(
                   R"({"dimension":1,"resolution":2,"atoms":[[[0.3],1.0]]})")),
               DataError);
  EXPECT_THROW(signature_from_json(Json::parse(
                   R"({"dimension":1,"resolution":2,"atoms":[[[0.25],0.4],[[0.75],0.4]]})")),
               DataError);
}

TEST(Json, TargetSpecsRoundTripInDocumentOrder) {
  const Json json = Json::parse(R"({
    "zeta": {"kind": "monotone", "orientation": [1, -1]},
    "alpha": {"kind": "pattern", "pattern": "circle", "sample_size": 2000, "seed": 3},
    "mid": {"kind": "explicit",
            "signature": {"dimension": 2, "resolution": 2,
                          "atoms": [[[0.25, 0.75], 0.5], [[0.75, 0.25], 0.5]]}}
  })");
  const auto specs = target_specs_from_json(json);
  ASSERT_EQ(specs.size(), 3u);
  EXPECT_EQ(specs[0].name, "zeta");
  EXPECT_EQ(specs[1].name, "alpha");
  EXPECT_EQ(std::get<PatternTarget>(specs[1].source).sample_size, 2000u);
  EXPECT_EQ(target_specs_to_json(specs), json);
  EXPECT_THROW(target_specs_from_json(Json::parse(R"({"a": {"kind": "weird"}})")), DataError);
  EXPECT_THROW(target_specs_from_json(Json::parse(R"([1, 2])")), DataError);
}

TEST(Json, DistanceMatrixRoundTrip) {
  const DistanceMatrix dm(3, {0, 1, 2, 1, 0, 0.5, 2, 0.5, 0}, {"a", "b", "c"});
  const DistanceMatrix back = distance_matrix_from_json(distance_matrix_to_json(dm));
  EXPECT_TRUE(std::ranges::equal(back.entries(), dm.entries()));
  EXPECT_TRUE(std::ranges::equal(back.labels(), dm.labels()));
  EXPECT_THROW(distance_matrix_from_json(Json::parse(R"({"entries": [[0, 1], [2, 0]]})")),
               DataError);
}

TEST(Files, MissingFileIsDataError) {
  EXPECT_THROW(read_text_file("/nonexistent/file.csv"), DataError);
  EXPECT_THROW(read_panel_csv("/nonexistent/file.csv"), DataError);
}
