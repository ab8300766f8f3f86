#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <memory>

#include <json.hpp>

#include "oracles.hpp"
#include "subfields/cli/run.hpp"

using namespace subfields;
using namespace subfields::cli;
using oracle::zp;

namespace {

RunResult run_poly(const std::string& text, Format fmt = Format::json) {
  RunConfig cfg;
  cfg.input = text;
  cfg.format = fmt;
  return run(cfg);
}

struct Proc {
  int status = -1;
  std::string out;
};

Proc shell(const std::string& cmd) {
  Proc p;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return p;
  std::array<char, 4096> buf;
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) p.out.append(buf.data(), got);
  int st = pclose(pipe);
  p.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return p;
}

std::string binary() { return SUBFIELDS_CLI_PATH; }

}  // namespace

TEST(Parse, Expressions) {
  EXPECT_EQ(parse_polynomial("x^6-2"), zp({-2, 0, 0, 0, 0, 0, 1}));
  EXPECT_EQ(parse_polynomial(" x^6 - 2 "), zp({-2, 0, 0, 0, 0, 0, 1}));
  EXPECT_EQ(parse_polynomial("2x^2 - 3"), zp({-3, 0, 2}));
  EXPECT_EQ(parse_polynomial("2*x^2-3"), zp({-3, 0, 2}));
  EXPECT_EQ(parse_polynomial("(x+1)(x-1)"), zp({-1, 0, 1}));
  EXPECT_EQ(parse_polynomial("-(x^2) + 4x - -1"), zp({1, 4, -1}));
  EXPECT_EQ(parse_polynomial("(x^2+1)^2"), zp({1, 0, 2, 0, 1}));
  EXPECT_EQ(parse_polynomial("123456789012345678901234567890"), ZPoly{Integer("123456789012345678901234567890")});
}

TEST(Parse, Json) {
  EXPECT_EQ(parse_polynomial(R"({"coeffs": [-2, 0, 0, 1]})"), zp({-2, 0, 0, 1}));
  EXPECT_EQ(parse_polynomial(R"({"coeffs": ["-2", 0, "1"]})"), zp({-2, 0, 1}));
  EXPECT_THROW(parse_polynomial(R"({"coeffs": [1.5, 1]})"), ParseError);
  EXPECT_THROW(parse_polynomial(R"({"coeffs": "x"})"), ParseError);
  EXPECT_THROW(parse_polynomial(R"({"coeffs": [1, 2)"), ParseError);
}

TEST(Parse, Errors) {
  for (const char* bad : {"", "x^", "x^-1", "(x+1", "x+1)", "y^2", "x^2 $ 1", "x^99999999", "2^x"})
    EXPECT_THROW(parse_polynomial(bad), ParseError) << bad;
}

TEST(Run, ExitCodes) {
  EXPECT_EQ(run_poly("x^2-1").exit_code, exit_reducible);
  EXPECT_EQ(run_poly("x^4-4").exit_code, exit_reducible);
  EXPECT_EQ(run_poly("garbage").exit_code, exit_parse);
  EXPECT_EQ(run_poly("7").exit_code, exit_parse);
  RunConfig big;
  big.input = "x^9-2";
  big.max_degree = 8;
  EXPECT_EQ(run(big).exit_code, exit_degree_guard);
  RunConfig bad;
  bad.input = "x^6-2";
  bad.prime = 3;
  EXPECT_EQ(run(bad).exit_code, exit_parse);
  bad.prime = 1000;
  EXPECT_EQ(run(bad).exit_code, exit_parse);
  RunResult ok = run_poly("x^3-2");
  EXPECT_EQ(ok.exit_code, exit_ok);
  EXPECT_TRUE(ok.diagnostics.empty());
}

TEST(Run, TextOutput) {
  RunResult r = run_poly("x^6-2", Format::text);
  ASSERT_EQ(r.exit_code, exit_ok);
  EXPECT_NE(r.output.find("subfields (m = 4)"), std::string::npos);
  for (const char* d : {"degree 1 ", "degree 2 ", "degree 3 ", "degree 6 "}) EXPECT_NE(r.output.find(d), std::string::npos) << d;
  EXPECT_NE(r.output.find("f2 = x + a"), std::string::npos) << r.output;
  EXPECT_NE(r.output.find("verified: no"), std::string::npos);
}

TEST(Run, DotOutput) {
  RunResult r = run_poly("x^6-2", Format::dot);
  ASSERT_EQ(r.exit_code, exit_ok);
  EXPECT_EQ(r.output.rfind("digraph subfields {", 0), 0u);
  EXPECT_NE(r.output.find("s0 -> s1;"), std::string::npos);
  EXPECT_NE(r.output.find("s2 -> s3;"), std::string::npos);
}

TEST(Run, JsonRoundTrip) {
  RunConfig cfg;
  cfg.input = "x^6-2";
  cfg.verify = true;
  cfg.generators = true;
  RunResult r = run(cfg);
  ASSERT_EQ(r.exit_code, exit_ok) << r.diagnostics;
  auto doc = nlohmann::json::parse(r.output);
  EXPECT_EQ(doc["schema"], 1);
  EXPECT_EQ(doc["degree"], 6);
  EXPECT_EQ(doc["coeffs"], nlohmann::json({"-2", "0", "0", "0", "0", "0", "1"}));
  EXPECT_EQ(doc["alpha_scale"], "1");
  EXPECT_TRUE(doc["verified"].get<bool>());
  EXPECT_EQ(doc["factorization"].size(), 4u);
  EXPECT_EQ(doc["principal"][1]["partition"], nlohmann::json::parse("[[1,2],[3,4]]"));
  const auto& subs = doc["subfields"];
  ASSERT_EQ(subs.size(), 4u);
  // Rebuild partitions from the document and check the join closure.
  std::set<PartitionVec> parts;
  for (const auto& s : subs) {
    std::vector<std::vector<std::size_t>> ps;
    for (const auto& part : s["partition"]) {
      ps.emplace_back();
      for (const auto& i : part) ps.back().push_back(i.get<std::size_t>() - 1);
    }
    parts.insert(PartitionVec::from_parts(4, ps));
    EXPECT_EQ(s["subfield_poly_factor_indices"][0], 1);
    for (const auto& g : s["generators"]) EXPECT_EQ(g.size(), 6u);
  }
  for (const auto& a : parts)
    for (const auto& b : parts) EXPECT_TRUE(parts.count(join(a, b)));
  EXPECT_EQ(doc["hasse_edges"], nlohmann::json::parse("[[0,1],[0,2],[1,3],[2,3]]"));
  // Key order is part of the format.
  std::vector<std::string> keys;
  for (auto it = doc.begin(); it != doc.end(); ++it) keys.push_back(it.key());
  std::vector<std::string> want{"alpha_scale", "coeffs", "degree",    "factorization", "hasse_edges", "monic_poly",
                                "poly",        "prime",  "principal", "schema",        "subfields",   "verified"};
  EXPECT_EQ(keys, want);  // nlohmann sorts object keys
}

TEST(Run, NonMonicInput) {
  RunConfig cfg;
  cfg.input = "2x^2-3";
  cfg.verify = true;
  RunResult r = run(cfg);
  ASSERT_EQ(r.exit_code, exit_ok) << r.diagnostics;
  auto doc = nlohmann::json::parse(r.output);
  EXPECT_EQ(doc["alpha_scale"], "2");
  EXPECT_EQ(doc["monic_poly"], "x^2 - 6");
  EXPECT_EQ(doc["subfields"].size(), 2u);
}

TEST(Run, Deterministic) {
  RunConfig a;
  a.input = "x^8 + 1";
  a.generators = true;
  a.seed = 5;
  RunConfig b = a;
  b.threads = 4;
  std::string first = run(a).output;
  EXPECT_EQ(run(a).output, first);
  EXPECT_EQ(run(b).output, first);
}

TEST(Binary, PolyFlagAndExitCodes) {
  Proc ok = shell(binary() + " --poly 'x^6-2' --format text --verify");
  EXPECT_EQ(ok.status, 0);
  EXPECT_NE(ok.out.find("verified: yes"), std::string::npos);
  EXPECT_EQ(shell(binary() + " --poly 'x^2-1' 2>/dev/null").status, 2);
  EXPECT_EQ(shell(binary() + " --poly 'x^' 2>/dev/null").status, 3);
  EXPECT_EQ(shell(binary() + " --poly 'x^6-2' --format yaml 2>/dev/null").status, 3);
  EXPECT_EQ(shell(binary() + " --poly 'x^6-2' --format 1 2>/dev/null").status, 3);
  EXPECT_EQ(shell(binary() + " --poly 'x^6-2' --format TEXT").out, ok.out.substr(0, ok.out.find("verified")) + "verified: no\n");
  EXPECT_EQ(shell(binary() + " --poly 'x^6-2' --threads 0 2>/dev/null").status, 3);
  EXPECT_EQ(shell(binary() + " --poly 'x^6-2' --max-degree 4 2>/dev/null").status, 4);
  EXPECT_EQ(shell(binary() + " --poly 'x^6-2' --prime 3 2>/dev/null").status, 3);
  EXPECT_EQ(shell(binary() + " 2>/dev/null").status, 3);
  EXPECT_EQ(shell(binary() + " --help >/dev/null").status, 0);
}

TEST(Binary, StdinAndFile) {
  Proc a = shell("echo '{\"coeffs\":[-2,0,0,1]}' | " + binary() + " --poly -");
  ASSERT_EQ(a.status, 0);
  Proc b = shell(binary() + " --poly 'x^3 - 2'");
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(shell(binary() + " --file /nonexistent/poly.txt 2>/dev/null").status, 3);
}
