#include <gtest/gtest.h>

#include <filesystem>

#include "support.hpp"

using namespace toriq;
using namespace testing_support;

TEST(Io, IntegersRoundTrip) {
  for (const Int& x : {Int(0), Int(-7), Int("9007199254740991"), Int("9007199254740992"), Int("-123456789012345678901234567890")}) {
    json j = int_to_json(x);
    EXPECT_EQ(int_from_json(json::parse(j.dump())), x);
  }
  EXPECT_TRUE(int_to_json(Int(5)).is_number());
  EXPECT_TRUE(int_to_json(Int("123456789012345678901234567890")).is_string());
  EXPECT_THROW(int_from_json(json("1.5")), Error);
  EXPECT_THROW(int_from_json(json(1.5)), Error);
}

TEST(Io, RationalsRoundTrip) {
  EXPECT_EQ(rat_from_json(rat_to_json(Rat(-4, 6))), Rat(-2, 3));
  EXPECT_EQ(rat_from_json(json(3)), Rat(3));
  EXPECT_EQ(rat_from_json(json("7/14")), Rat(1, 2));
  EXPECT_THROW(rat_from_json(json("1/0")), Error);
}

TEST(Io, MatricesValidateShape) {
  EXPECT_THROW(int_matrix_from_json(json::parse("[[1, 2], [3]]")), Error);
  IntMatrix a{{1, -2, 3}, {0, 4, 5}};
  EXPECT_EQ(int_matrix_from_json(matrix_to_json(a)), a);
  RatMatrix b = to_rat(a).scaled(Rat(1, 3));
  EXPECT_EQ(rat_matrix_from_json(matrix_to_json(b)), b);
}

TEST(Io, ConesAreOneBased) {
  std::vector<IndexSet> cones{{0, 1, 3}, {1, 2}};
  json j = cones_to_json(cones);
  EXPECT_EQ(j.dump(), "[[1,2,4],[2,3]]");
  EXPECT_EQ(cones_from_json(j, 4), cones);
  EXPECT_THROW(cones_from_json(json::parse("[[0, 1]]"), 4), Error);
  EXPECT_THROW(cones_from_json(json::parse("[[1, 5]]"), 4), Error);
  EXPECT_THROW(cones_from_json(json::parse("[[1, 1, 2]]"), 4), Error);
}

TEST(Io, DocumentParsing) {
  InputDocument d = parse_document(json::parse(R"({"matrix": [[1, 0, -1], [0, 1, -1]]})"));
  EXPECT_EQ(d.role, Role::FanMatrix);
  EXPECT_FALSE(d.fan.has_value());
  EXPECT_EQ(parse_document(document_to_json(d)), d);
  EXPECT_THROW(parse_document(json::parse(R"({"matrix": [[1]], "colour": 3})")), Error);
  EXPECT_THROW(parse_document(json::parse(R"({"matrix": [[1, 0], [0, "x"]]})")), Error);
  EXPECT_THROW(parse_document(json::parse(R"({"role": "fan-matrix"})")), Error);
  EXPECT_THROW(parse_document(json::parse(R"({"matrix": [[1, 2]], "role": "fan-matrix",
      "torsion": {"factors": [3], "columns": [[1], [0]]}})")),
               Error);
  EXPECT_THROW(parse_document(json::parse(R"({"matrix": [[1, 2]], "role": "weight-matrix",
      "torsion": {"factors": [1], "columns": [[1], [0]]}})")),
               Error);
  EXPECT_THROW(load_document(fixture("missing.json")), Error);
  EXPECT_THROW(parse_json_text("{ not json"), Error);
}

TEST(Io, TorsionColumnsTranspose) {
  InputDocument d = load_document(fixture("mds_grading.json"));
  ASSERT_TRUE(d.torsion.has_value());
  EXPECT_EQ(d.torsion->factors, (IntVec{3}));
  EXPECT_EQ(d.torsion->rows, (IntMatrix{{1, 0, 1, 0, 0}}));
  EXPECT_EQ(parse_document(document_to_json(d)), d);
}

// parse -> analyze -> serialize -> parse gives the same report for every fixture.
TEST(Io, ReportRoundTripOnEveryFixture) {
  int count = 0;
  for (const auto& e : std::filesystem::directory_iterator(TORIQ_FIXTURES)) {
    if (e.path().extension() != ".json") continue;
    InputDocument doc = load_document(e.path().string());
    EXPECT_EQ(parse_document(json::parse(dump(document_to_json(doc)))), doc) << e.path();
    CoveringData d = analyze(resolve_fan(doc));
    InvariantReport r = make_report(d, doc.name);
    EXPECT_TRUE(r.checks_hold()) << e.path();
    std::string text = dump(report_to_json(r));
    InvariantReport back = report_from_json(json::parse(text));
    EXPECT_EQ(back, r) << e.path();
    EXPECT_EQ(dump(report_to_json(back)), text);
    ++count;
  }
  EXPECT_GE(count, 38);
}

TEST(Io, ReportFieldsAreOneBasedAndNamed) {
  InvariantReport r = make_report(analyze_fixture("blupP3_X.json"), "X");
  json j = report_to_json(r);
  EXPECT_EQ(j["name"], "X");
  EXPECT_EQ(j["g_Q"], 4);
  EXPECT_EQ(j["modulus_Q"], 8);
  EXPECT_EQ(j["degrees"]["X"], "48");
  EXPECT_EQ(j["groups"]["G_Q"]["factors"], json::parse("[2, 2]"));
  bool found = false;
  for (const auto& c : j["fan"])
    if (c == json::parse("[1, 2, 4, 6]")) found = true;
  EXPECT_TRUE(found);
}

TEST(Io, ErrorJson) {
  json j = error_to_json(Error(ErrorCode::OutsideMoving, "nope"));
  EXPECT_EQ(j["error"]["code"], "OutsideMoving");
  EXPECT_EQ(j["error"]["message"], "nope");
}
