#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "cli.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = hdc::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path tmp(const std::string& name) {
  const fs::path dir = fs::path(HDC_TEST_TMPDIR) / "cli_tmp";
  fs::create_directories(dir);
  return dir / name;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  return {std::istreambuf_iterator<char>(in), {}};
}

}  // namespace

TEST(Cli, ComputeRp2Lambda) {
  const Result r = run({"compute", "--gen", "rp2", "--quantity", "lambda"});
  ASSERT_EQ(r.code, 0) << r.err;
  const json j = json::parse(r.out);
  EXPECT_NEAR(j["lambda"].get<double>(), 0.764, 0.005);
  EXPECT_FALSE(j.contains("h"));
  EXPECT_NE(r.err.find("lambda"), std::string::npos);
}

TEST(Cli, ComputeMoebiusAll) {
  const Result r = run({"compute", "--gen", "moebius_cyl", "--n", "8", "--quantity", "all", "--c-scan-all"});
  ASSERT_EQ(r.code, 0) << r.err;
  const json j = json::parse(r.out);
  EXPECT_EQ(j["h"]["value"], 8.0);
  EXPECT_EQ(j["h_prime"]["value"], 8.0);
  EXPECT_EQ(j["C"]["value"], 3.0);
  EXPECT_LT(std::abs(j["lambda"].get<double>()), 1e-8);
  for (const char* q : {"h", "h_prime", "h_tilde", "phi", "phi_prime"}) {
    const auto& e = j[q];
    EXPECT_DOUBLE_EQ(e["value"].get<double>(),
                     e["scale"].get<double>() * e["num"].get<double>() / e["den"].get<double>());
  }
}

TEST(Cli, InputErrorsExitTwo) {
  EXPECT_EQ(run({"compute", "--input", tmp("missing.json").string()}).code, 2);
  EXPECT_EQ(run({"generate", "moebius_cyl", "--n", "4"}).code, 2);
  EXPECT_EQ(run({"compute", "--gen", "nope"}).code, 2);
  EXPECT_EQ(run({"compute", "--gen", "rp2", "--quantity", "volume"}).code, 2);
  EXPECT_EQ(run({"compute", "--gen", "rp2", "--tolerance", "0.5"}).code, 2);
  EXPECT_EQ(run({"compute", "--gen", "rp2", "--partition-cap", "0"}).code, 2);
  EXPECT_EQ(run({"compute", "--bogus"}).code, 2);
  EXPECT_EQ(run({"verify", "--claim", "THM7", "--gen", "rp2"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
}

TEST(Cli, ResourceCapExitsThree) {
  const Result r = run({"compute", "--gen", "complete", "--n", "9", "--k", "2", "--quantity", "h", "--partition-cap", "5"});
  EXPECT_EQ(r.code, 3);
  EXPECT_NE(r.err.find("partition-cap"), std::string::npos);
  EXPECT_EQ(run({"compute", "--gen", "rp2", "--quantity", "lambda", "--dense-cap", "3"}).code, 3);
}

TEST(Cli, HelpExitsZero) { EXPECT_EQ(run({"--help"}).code, 0); }

TEST(Cli, GenerateWritesValidatedComplex) {
  const fs::path p = tmp("rp2.json");
  ASSERT_EQ(run({"generate", "rp2", "-o", p.string()}).code, 0);
  const json j = json::parse(slurp(p));
  EXPECT_EQ(j["facets"].size(), 10u);
  EXPECT_FALSE(fs::exists(p.string() + ".tmp"));
  const Result r = run({"generate", "complete", "--n", "6", "--k", "2"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(json::parse(r.out)["facets"].size(), 20u);
}

TEST(Cli, RoundTripMatchesGenerator) {
  const std::vector<std::vector<std::string>> gens{{"rp2"},
                                                   {"y_complex", "--n", "8"},
                                                   {"moebius_cyl", "--n", "7"},
                                                   {"complete", "--n", "5", "--k", "2"},
                                                   {"graph", "--n", "5", "--edges", "1-2,2-3,3-4,4-5,5-1"},
                                                   {"random", "--n", "7", "--k", "2", "--p", "0.5", "--seed", "3"}};
  for (const auto& g : gens) {
    const fs::path p = tmp(g[0] + ".json");
    std::vector<std::string> gen_args{"generate"};
    gen_args.insert(gen_args.end(), g.begin(), g.end());
    gen_args.insert(gen_args.end(), {"-o", p.string()});
    ASSERT_EQ(run(gen_args).code, 0) << g[0];

    std::vector<std::string> direct{"compute", "--gen"};
    direct.insert(direct.end(), g.begin(), g.end());
    const Result a = run(direct);
    const Result b = run({"compute", "--input", p.string()});
    ASSERT_EQ(a.code, 0) << a.err;
    ASSERT_EQ(b.code, 0) << b.err;
    EXPECT_EQ(a.out, b.out) << g[0];
  }
}

TEST(Cli, OutputFileIsAtomicAndMatchesStdout) {
  const fs::path p = tmp("out.json");
  const Result direct = run({"compute", "--gen", "rp2", "--quantity", "h,phi"});
  ASSERT_EQ(run({"compute", "--gen", "rp2", "--quantity", "h,phi", "-o", p.string()}).code, 0);
  EXPECT_EQ(slurp(p), direct.out);
  EXPECT_FALSE(fs::exists(p.string() + ".tmp"));
}

TEST(Cli, VerifyProp6AndRandomTheorem3) {
  const Result p = run({"verify", "--claim", "PROP6", "--n", "5", "--k", "2"});
  EXPECT_EQ(p.code, 0) << p.err;

  const Result r = run({"verify", "--claim", "THM3", "--gen", "random", "--n", "7", "--k", "2", "--p", "0.6", "--trials", "20"});
  ASSERT_EQ(r.code, 0) << r.err;
  std::istringstream in(r.out);
  std::string line;
  int lines = 0;
  while (std::getline(in, line)) {
    const json j = json::parse(line);
    EXPECT_EQ(j["claim_id"], "THM3");
    EXPECT_EQ(j["verdict"], "pass");
    ++lines;
  }
  EXPECT_EQ(lines, 20);
}

TEST(Cli, VerifyIsReproducible) {
  const std::vector<std::string> args{"verify", "--gen", "rp2", "--claim", "LEM6A,LEM7", "--trials", "5"};
  const Result a = run(args), b = run(args);
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
}

TEST(Cli, Info) {
  const Result r = run({"info", "--gen", "rp2"});
  ASSERT_EQ(r.code, 0) << r.err;
  const json j = json::parse(r.out);
  EXPECT_EQ(j["completion_extra_faces"], 10);
  EXPECT_EQ(j["complete_skeleton"], true);
}
