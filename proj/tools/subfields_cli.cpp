#include <algorithm>
#include <cctype>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "subfields/cli/run.hpp"

namespace {

std::string slurp(std::istream& in) { return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()}; }

}  // namespace

int main(int argc, char** argv) {
  using namespace subfields::cli;
  CLI::App app{"Subfield lattice of Q[x]/(f) for an irreducible integer polynomial f"};
  std::string poly, file;
  RunConfig cfg;
  std::uint64_t prime = 0;
  std::map<std::string, Format> formats{{"json", Format::json}, {"dot", Format::dot}, {"text", Format::text}};
  auto* input = app.add_option("--poly", poly, "polynomial in x, e.g. \"x^6-2\", or {\"coeffs\":[...]}; \"-\" reads stdin");
  app.add_option("--file", file, "read the polynomial from a file")->excludes(input);
  std::string format = "json";
  app.add_option("--format", format, "output format: json, dot or text")
      ->check(CLI::IsMember({"json", "dot", "text"}, CLI::ignore_case))
      ->capture_default_str();
  app.add_option("--seed", cfg.seed, "seed for the random evaluation points");
  app.add_option("--prime", prime, "prime for the modular equations (must be good for f)");
  app.add_flag("--verify", cfg.verify, "check every subfield exactly; exit 5 on failure");
  app.add_flag("--generators", cfg.generators, "compute generators of each subfield");
  app.add_option("--max-degree", cfg.max_degree, "refuse inputs of larger degree (exit 4)");
  app.add_option("--threads", cfg.threads, "worker threads")->check(CLI::Range(1u, 256u));
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : exit_parse;
  }

  if (!file.empty()) {
    std::ifstream in(file);
    if (!in) {
      std::cerr << "cannot read " << file << "\n";
      return exit_parse;
    }
    cfg.input = slurp(in);
  } else if (poly == "-") {
    cfg.input = slurp(std::cin);
  } else if (!poly.empty()) {
    cfg.input = poly;
  } else {
    std::cerr << "one of --poly or --file is required\n";
    return exit_parse;
  }
  if (prime != 0) cfg.prime = prime;
  std::transform(format.begin(), format.end(), format.begin(), [](unsigned char c) { return std::tolower(c); });
  cfg.format = formats.at(format);

  RunResult res = run(cfg);
  std::cout << res.output;
  std::cerr << res.diagnostics;
  return res.exit_code;
}
