#include <array>
#include <cstdio>
#include <fstream>
#include <string>

#include <sys/wait.h>

#include <gtest/gtest.h>

#include "isoprod/document.hpp"
#include "isoprod/error.hpp"
#include "isoprod/examples.hpp"
#include "isoprod/report.hpp"

namespace isoprod {
namespace {

using document::Json;

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::kInvalidArgument;
}

TEST(Document, RoundTripIsExact) {
  for (const auto& d : {examples::example1(1, 2, 3), examples::example3(2), examples::example4()}) {
    const Json j = document::datum_json(d);
    const std::string text = document::dump(j);
    const Json back = document::datum_json(document::parse_datum(document::parse_text(text)));
    EXPECT_EQ(document::dump(back), text);
  }
}

TEST(Document, ReducesRepresentatives) {
  const Json j = document::parse_text(R"({"group":[2,2,2],
    "kernels":[[[1,0,0]],[[0,1,0]],[[0,0,1]]],
    "vectors":[{"g_prime":1,"branch":[[0,0,3],[0,0,-1]],"eta":[[0,1,0],[0,0,1]]},
               {"g_prime":1,"branch":[[1,0,0],[1,0,0]],"eta":[[1,0,0],[0,0,1]]},
               {"g_prime":1,"branch":[[0,1,0],[0,1,0]],"eta":[[1,0,0],[0,1,0]]}]})");
  const AlgebraicDatum d = document::parse_datum(j);
  EXPECT_EQ(d.input(0).branch[0], GroupElement(d.group(), {0, 0, 1}));
  EXPECT_TRUE(validate_datum(d).is_valid());
}

TEST(Document, SchemaErrors) {
  const std::string good = document::dump(document::datum_json(examples::example1(1, 1, 1)));
  auto mutate = [&](auto&& f) {
    Json j = document::parse_text(good);
    f(j);
    return [j] { document::parse_datum(j); };
  };
  EXPECT_EQ(code_of(mutate([](Json& j) { j.erase("group"); })), ErrorCode::kSchema);
  EXPECT_EQ(code_of(mutate([](Json& j) { j["extra"] = 1; })), ErrorCode::kSchema);
  EXPECT_EQ(code_of(mutate([](Json& j) { j["kernels"][0][0] = {1, 0}; })), ErrorCode::kSchema);
  EXPECT_EQ(code_of(mutate([](Json& j) { j["vectors"][1]["g_prime"] = 1.5; })),
            ErrorCode::kSchema);
  EXPECT_EQ(code_of(mutate([](Json& j) { j["vectors"].erase(2); })), ErrorCode::kSchema);
  EXPECT_EQ(code_of([] { document::parse_text("{\"group\": [2,"); }), ErrorCode::kParse);
}

TEST(Document, SearchSpec) {
  const SearchSpec s = document::parse_search_spec(document::parse_text(
      R"({"group":[2,2,2],"kernels":[[[[1,0,0]],[[0,1,0]],[[0,0,1]]]],"max_branch":3,"eta":"all"})"));
  EXPECT_EQ(s.kernel_policy, KernelPolicy::kExplicit);
  ASSERT_EQ(s.kernels.size(), 1u);
  EXPECT_EQ(s.kernels[0][1][0], (std::vector<std::int64_t>{0, 1, 0}));
  EXPECT_EQ(s.max_branch, 3);
  EXPECT_EQ(s.eta, EtaPolicy::kAll);
  EXPECT_EQ(code_of([] {
              document::parse_search_spec(document::parse_text(R"({"group":[2],"eta":"some"})"));
            }),
            ErrorCode::kSchema);
}

TEST(Report, SectionsAndDeterminism) {
  const AlgebraicDatum d = examples::example1(1, 1, 1);
  const Json a = report::datum_report(d, report::all_sections());
  const Json b = report::datum_report(d, report::all_sections());
  EXPECT_EQ(document::dump(a), document::dump(b));
  EXPECT_EQ(a["aut0"]["invariant_factors"], Json({2, 2}));
  EXPECT_EQ(a["aut0"]["status"], "Proven");
  EXPECT_EQ(a["hodge"][3][0], 2);
  EXPECT_EQ(a["invariants"]["k_cubed"], 48);
  EXPECT_EQ(a["admissible"]["first"], 1);
  const std::string text = report::render_text(a);
  EXPECT_NE(text.find("Hodge diamond"), std::string::npos);
  EXPECT_NE(text.find("status: Proven"), std::string::npos);
}

TEST(Report, NonFreeDatumContinues) {
  const Json r = report::datum_report(examples::example3(2), report::all_sections());
  EXPECT_FALSE(report::validation_failed(r));
  EXPECT_FALSE(r["validation"]["freeness"]["pass"].get<bool>());
  EXPECT_EQ(r["validation"]["freeness"]["witness"], Json({0, 2, 2}));
  EXPECT_EQ(r["aut0"]["status"], "NonFreeKernelOnly");
  EXPECT_EQ(r["aut0"]["invariant_factors"], Json({4}));
  EXPECT_FALSE(r["invariants"].contains("chi_o"));
}

struct CliRun {
  int code;
  std::string out;
};

CliRun run_cli(const std::string& args) {
  const std::string cmd = std::string(ISOPROD_CLI) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  std::string out;
  std::array<char, 4096> buf{};
  while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
  const int status = pclose(pipe);
  return {WEXITSTATUS(status), out};
}

std::string temp_file(const std::string& name, const std::string& content) {
  const std::string path = ::testing::TempDir() + name;
  std::ofstream(path) << content;
  return path;
}

TEST(Cli, Example1Aut0) {
  const CliRun r = run_cli("example example1 --param n1=1,n2=1,n3=1 --format json");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(Json::parse(r.out)["aut0"]["invariant_factors"], Json({2, 2}));
}

TEST(Cli, Example3) {
  const CliRun r = run_cli("example example3 --param n=2 --format json");
  ASSERT_EQ(r.code, 0);
  const Json j = Json::parse(r.out);
  EXPECT_FALSE(j["validation"]["freeness"]["pass"].get<bool>());
  EXPECT_EQ(j["aut0"]["status"], "NonFreeKernelOnly");
  EXPECT_EQ(j["aut0"]["invariant_factors"], Json({4}));
}

TEST(Cli, MalformedJsonExitsTwoWithoutReport) {
  const CliRun r = run_cli("report " + temp_file("bad.json", "{\"group\": [2, 2"));
  EXPECT_EQ(r.code, 2);
  EXPECT_TRUE(r.out.empty());
}

TEST(Cli, InvalidDatumExitsOneWithReport) {
  Json j = document::datum_json(examples::example1(1, 1, 1));
  j["vectors"][0]["branch"].erase(0);
  const CliRun r = run_cli("validate --format json " + temp_file("invalid.json", j.dump()));
  EXPECT_EQ(r.code, 1);
  const Json out = Json::parse(r.out);
  EXPECT_FALSE(out["validation"]["vectors"][0]["ok"].get<bool>());
}

TEST(Cli, Example2bRejectsN1EqualOne) {
  EXPECT_EQ(run_cli("example example2b --param n1=1").code, 2);
}

TEST(Cli, DatumRoundTripThroughFiles) {
  const CliRun d = run_cli("example example4 --datum");
  ASSERT_EQ(d.code, 0);
  const std::string path = temp_file("ex4.json", d.out);
  const CliRun a = run_cli("aut0 --format json " + path);
  const CliRun b = run_cli("aut0 --format json " + path);
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(Json::parse(a.out)["aut0"]["generators"][0], Json({{0, 0, 0, 0}, {1, 0, 1, 0}, {0, 0, 0, 0}}));
}

TEST(Cli, SamplesValidate) {
  for (const char* name : {"example1.json", "example3.json", "example4.json"}) {
    const CliRun r = run_cli(std::string("report --oracle --format json ") + ISOPROD_SAMPLES + "/" + name);
    EXPECT_EQ(r.code, 0) << name;
    EXPECT_TRUE(Json::parse(r.out)["oracle"]["all_agree"].get<bool>()) << name;
  }
}

TEST(Cli, SearchSubcommand) {
  const std::string spec = temp_file(
      "spec.json",
      R"({"group":[2,2,2],"kernels":[[[[1,0,0]],[[0,1,0]],[[0,0,1]]]],"max_branch":2})");
  const CliRun a = run_cli("search --format json " + spec);
  const CliRun b = run_cli("search --format json --seed 5 " + spec);
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  const CliRun capped = run_cli("search " + temp_file("capped.json", R"({"group":[2,2,2],"max_branch":4,"cap":10})"));
  EXPECT_EQ(capped.code, 2);
}

}  // namespace
}  // namespace isoprod
