#include <gtest/gtest.h>

#include "outvcd/corpus.hpp"
#include "outvcd/report_json.hpp"

using namespace outvcd;

namespace {

bool keys_sorted(const Json& j) {
  if (j.is_object()) {
    std::string prev;
    bool first = true;
    for (auto it = j.begin(); it != j.end(); ++it) {
      if (!first && !(prev < it.key())) return false;
      prev = it.key();
      first = false;
      if (!keys_sorted(it.value())) return false;
    }
  } else if (j.is_array()) {
    for (const auto& x : j)
      if (!keys_sorted(x)) return false;
  }
  return true;
}

void expect_round_trip(const Json& j) {
  const std::string once = j.dump(2);
  EXPECT_EQ(Json::parse(once).dump(2), once);
  EXPECT_TRUE(keys_sorted(Json::parse(once)));
}

}  // namespace

TEST(Json, VcdReportRoundTrip) {
  for (const auto& ng : verification_corpus(6)) expect_round_trip(to_json(vcd_report(ng.graph)));
}

TEST(Json, ReportFields) {
  const Json j = to_json(vcd_report(fixture_c5_leaf()));
  EXPECT_EQ(j["exact"], 3);
  EXPECT_EQ(j["kernel_rank"], 1);
  EXPECT_EQ(j["lower"]["case"], "NONHUB_EDGE");
  EXPECT_EQ(j["theorems"], Json::array({"NoShortCycles", "Cycle(5)"}));
  for (const char* key : {"counts", "gamma0", "pieces", "hubs", "lower", "upper"}) EXPECT_TRUE(j.contains(key)) << key;
}

TEST(Json, GeneratorSetRoundTrip) {
  const GraphAnalysis a = analyze_structure(fixture_p5());
  const Json j = to_json(build_generator_set(a, default_choices(a)));
  expect_round_trip(j);
  EXPECT_EQ(j["generators"].size(), 7u);
  EXPECT_EQ(j["outer_rank"], 5);
}

TEST(Json, ComplexHomologyCertificate) {
  const IdealEdgeComplex c = build_complex({2, 1}, true);
  expect_round_trip(to_json(c));
  expect_round_trip(to_json(reduced_homology(c.complex)));
  expect_round_trip(to_json(morse_collapse_certificate(2, 1)));
}

TEST(Json, ExponentVectors) {
  const PsigmaSpec spec{3, 1};
  const ExponentVector v = exponent_vector_from_json(spec, Json::parse(R"({"b2": 1, "c3": 2})"));
  EXPECT_EQ(v.b.at(2), 1);
  EXPECT_EQ(v.c.at(3), 2);
  EXPECT_EQ(exponent_vector_from_json(spec, to_json(spec, v)).flatten(spec), v.flatten(spec));
  EXPECT_THROW(exponent_vector_from_json(spec, Json::parse(R"({"a2": 1})")), std::invalid_argument);
  EXPECT_THROW(exponent_vector_from_json(spec, Json::parse(R"({"b9": 1})")), std::invalid_argument);
}

TEST(Json, IneligibleReport) {
  const DefiningGraph g = parse_graph("edge a b\nedge a c\n");
  const Json j = to_json(validate(g), g);
  EXPECT_EQ(j["is_star"], true);
  EXPECT_EQ(j["eligible"], false);
  expect_round_trip(j);
}
