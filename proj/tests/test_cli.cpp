#include <gtest/gtest.h>

#include <sstream>

#include "commands.hpp"
#include "prefrank/fixtures.hpp"

using namespace prefrank;
using namespace prefrank::cli;

namespace {

const std::string kRespondent3 =
    "1 1/4 5 4 1/3 3\n"
    "4 1 5 5 3 5\n"
    "1/5 1/5 1 1/3 1/5 1/3\n"
    "1/4 1/5 3 1 1/4 1\n"
    "3 1/3 5 4 1 5\n"
    "1/3 1/5 3 1 1/5 1\n";

struct Run {
  int code;
  std::string out, err;
};

Run rate(const std::string& input, RateOptions opts = {}) {
  std::ostringstream out, err;
  const int code = cmd_rate(input, opts, out, err);
  return {code, out.str(), err.str()};
}

Run analyze_json(const std::string& text, AnalyzeOptions opts = {}, bool strict = false) {
  std::ostringstream out, err;
  const int code = cmd_analyze_text(text, std::nullopt, false, strict, opts, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(CmdRate, Respondent3Text) {
  const auto r = rate(kRespondent3, {OutputFormat::text, true, true});
  EXPECT_EQ(r.code, kOk) << r.err;
  EXPECT_NE(r.out.find("0.3798"), std::string::npos);
  EXPECT_NE(r.out.find("C2 > C5 > C1"), std::string::npos);
  EXPECT_NE(r.out.find("solution unique: no"), std::string::npos);
  EXPECT_NE(r.out.find("combined order: C2 > C5 > C1 > C6 >= C4 > C3"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("1.8488"), std::string::npos);
}

TEST(CmdRate, Respondent3Json) {
  const auto r = rate(kRespondent3, {OutputFormat::json, false, true});
  ASSERT_EQ(r.code, kOk) << r.err;
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_FALSE(doc["unique"].get<bool>());
  EXPECT_DOUBLE_EQ(doc["methods"]["SCB"]["ratings"][0].get<double>(), 0.3798);
  EXPECT_EQ(doc["methods"]["SCB"]["ranks"], nlohmann::json::parse("[3,1,6,4,2,5]"));
  EXPECT_EQ(doc["combined_order"].get<std::string>(), "C2 ≻ C5 ≻ C1 ≻ C6 ⪰ C4 ≻ C3");
  EXPECT_EQ(doc["interval"].size(), 6u);
}

TEST(CmdRate, CsvHasOneRowPerMethod) {
  const auto r = rate(kRespondent3, {OutputFormat::csv, true, true});
  ASSERT_EQ(r.code, kOk);
  EXPECT_EQ(r.out.rfind("method,C1,", 0), 0u);
  EXPECT_NE(r.out.find("\nSCW,0.3798,1.0000,0.1082,0.1755,0.6163,0.2279,3,1,6,5,2,4,"), std::string::npos) << r.out;
}

TEST(CmdRate, AllOnesMatrix) {
  const auto r = rate("1 1 1\n1 1 1\n1 1 1\n", {OutputFormat::json, true, true});
  ASSERT_EQ(r.code, kOk);
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_DOUBLE_EQ(doc["lambda"].get<double>(), 1.0);
  EXPECT_TRUE(doc["unique"].get<bool>());
  for (const auto& [name, m] : doc["methods"].items())
    EXPECT_EQ(m["ratings"], nlohmann::json::parse("[1.0,1.0,1.0]")) << name;
}

TEST(CmdRate, ExitCodes) {
  const auto bad = rate("1 3\n2 1\n");
  EXPECT_EQ(bad.code, kValidation);
  EXPECT_NE(bad.err.find("cell (2,1)"), std::string::npos) << bad.err;
  EXPECT_EQ(rate("1 3\n").code, kParse);
  EXPECT_EQ(rate("{ nope").code, kParse);
  EXPECT_EQ(rate("1 x\n1 1\n").code, kParse);
  EXPECT_EQ(rate("1 9\n1/9 1\n").code, kValidation);
  EXPECT_EQ(rate("1 9\n1/9 1\n", {OutputFormat::text, false, false}).code, kOk);
}

TEST(CmdRate, DeterministicOutput) {
  for (auto f : {OutputFormat::text, OutputFormat::json, OutputFormat::csv})
    EXPECT_EQ(rate(kRespondent3, {f, false, true}).out, rate(kRespondent3, {f, false, true}).out);
}

TEST(CmdAnalyze, FixtureBatchMatchCell) {
  AnalyzeOptions opts;
  opts.format = OutputFormat::json;
  opts.report.sections = {Section::match};
  const auto r = analyze_json(serialize_batch_json(fixtures::hotel_batch()), opts);
  ASSERT_EQ(r.code, kOk) << r.err;
  const auto doc = nlohmann::json::parse(r.out);
  const auto& m = doc["match"];
  ASSERT_TRUE(m.is_object()) << r.out;
  EXPECT_EQ(m["RSPE"]["RSGM"].get<int>(), 3) << m.dump();
}

TEST(CmdAnalyze, OnlyRequestedSection) {
  AnalyzeOptions opts;
  opts.format = OutputFormat::text;
  opts.report.sections = {Section::freq};
  opts.report.top_k = 5;
  const auto r = analyze_json(serialize_batch_json(fixtures::hotel_batch()), opts);
  ASSERT_EQ(r.code, kOk);
  EXPECT_NE(r.out.find("Most frequent"), std::string::npos);
  EXPECT_EQ(r.out.find("matching"), std::string::npos);
  EXPECT_EQ(r.out.find("Pearson"), std::string::npos);
  EXPECT_EQ(r.out.find("Mean rating"), std::string::npos);
}

TEST(CmdAnalyze, SingleRespondentNotice) {
  auto b = fixtures::hotel_batch();
  b.records.erase(b.records.begin() + 1, b.records.end());
  AnalyzeOptions opts;
  opts.format = OutputFormat::json;
  const auto r = analyze_json(serialize_batch_json(b), opts);
  ASSERT_EQ(r.code, kOk) << r.err;
  const auto doc = nlohmann::json::parse(r.out);
  ASSERT_TRUE(doc.contains("notices"));
  EXPECT_NE(doc["notices"][0].get<std::string>().find("single respondent"), std::string::npos);
}

TEST(CmdAnalyze, StrictScaleDefaultRejectsRespondent2) {
  const auto r = analyze_json(serialize_batch_json(fixtures::hotel_batch()), {}, true);
  EXPECT_EQ(r.code, kValidation);
  EXPECT_NE(r.err.find("0.75"), std::string::npos);
}

TEST(CmdAnalyze, ReferenceRankAndMeta) {
  AnalyzeOptions opts;
  opts.format = OutputFormat::json;
  opts.report.sections = {Section::distance};
  opts.report.references = {RankVector{{2, 1, 5, 6, 3, 4}, Tag::RR}};
  opts.meta_input = "batch.json";
  const auto r = analyze_json(serialize_batch_json(fixtures::hotel_batch()), opts);
  ASSERT_EQ(r.code, kOk) << r.err;
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["distance"][0]["reference"], nlohmann::json::parse("[2,1,5,6,3,4]"));
  EXPECT_EQ(doc["meta"]["input"].get<std::string>(), "batch.json");

  opts.report.references = {RankVector{{2, 1, 3}, Tag::RR}};
  EXPECT_EQ(analyze_json(serialize_batch_json(fixtures::hotel_batch()), opts).code, kValidation);
}

TEST(CmdAnalyze, ParseErrorExitCode) { EXPECT_EQ(analyze_json("[1,2").code, kParse); }

TEST(CmdSelfcheck, AllPass) {
  std::ostringstream out, err;
  EXPECT_EQ(cmd_selfcheck(fixtures::hotel_batch(), fixtures::published_results(), out, err), kOk);
  EXPECT_NE(out.str().find("12/12"), std::string::npos) << out.str();
}

TEST(CmdSelfcheck, CorruptedFixtureNamed) {
  auto published = fixtures::published_results();
  published[1].ratings[Tag::SGM][3] += 0.01;
  std::ostringstream out, err;
  EXPECT_NE(cmd_selfcheck(fixtures::hotel_batch(), published, out, err), kOk);
  EXPECT_NE(out.str().find("FAIL respondent 2 SGM"), std::string::npos) << out.str();
  EXPECT_NE(out.str().find("11/12"), std::string::npos);
}

TEST(Guarded, InternalErrorsMapToThree) {
  std::ostringstream err;
  EXPECT_EQ(guarded(err, [] () -> int { throw std::logic_error("boom"); }), kInternal);
  EXPECT_EQ(guarded(err, [] () -> int { throw DimensionMismatch("x"); }), kValidation);
}
