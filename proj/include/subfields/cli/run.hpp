#pragma once

#include <cstdint>
#include <optional>
#include <sstream>
#include <string>

#include <json.hpp>

#include "subfields/cli/format.hpp"
#include "subfields/cli/parse.hpp"
#include "subfields/lattice/lattice.hpp"

namespace subfields::cli {

enum class Format { json, dot, text };

enum ExitCode : int {
  exit_ok = 0,
  exit_reducible = 2,
  exit_parse = 3,
  exit_degree_guard = 4,
  exit_defect = 5,
};

struct RunConfig {
  std::string input;  // polynomial text, already read from --poly/--file/stdin
  Format format = Format::json;
  std::uint64_t seed = 0;
  std::optional<u64> prime;
  bool verify = false;
  bool generators = false;
  int max_degree = 64;
  unsigned threads = 1;
};

struct RunResult {
  int exit_code = exit_ok;
  std::string output;       // stdout
  std::string diagnostics;  // stderr
};

// Everything the serializers need.
struct Report {
  MonicModel model;
  Lattice lattice;
  bool generators = false;
  bool verified = false;
};

namespace run_detail {

inline nlohmann::json parts_json(const PartitionVec& p) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& part : p.parts()) {
    nlohmann::json a = nlohmann::json::array();
    for (auto i : part) a.push_back(i + 1);
    out.push_back(a);
  }
  return out;
}

inline nlohmann::json zcoeffs(const ZPoly& p) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& c : p.coeffs()) out.push_back(c.get_str());
  return out;
}

inline std::string factor_list(const std::vector<std::size_t>& part) {
  std::string s;
  for (auto j : part) s += (s.empty() ? "f" : "*f") + std::to_string(j + 1);
  return s;
}

}  // namespace run_detail

// Schema 1. Coefficients are exact decimal or fraction strings; elements of
// K are coordinate arrays in the basis 1, a, ..., a^(n-1), where a is the
// root of monic_poly. Indices of factors are 1-based, hasse_edges index the
// subfields array.
inline std::string to_json(const Report& rep) {
  using nlohmann::json;
  const auto& lat = rep.lattice;
  const auto& K = lat.field();
  json doc;
  doc["schema"] = 1;
  doc["degree"] = K.degree();
  doc["poly"] = format_zpoly(rep.model.input);
  doc["coeffs"] = run_detail::zcoeffs(rep.model.input);
  doc["monic_poly"] = format_zpoly(rep.model.monic);
  doc["alpha_scale"] = rep.model.scale.get_str();
  doc["prime"] = lat.prime.p;
  json fac = json::array();
  for (std::size_t j = 0; j < lat.sf.r(); ++j) {
    const KPoly& h = lat.sf.factors[j];
    json coeffs = json::array();
    for (const auto& c : h.coeffs()) coeffs.push_back(element_coords(K, c));
    fac.push_back({{"index", j + 1}, {"degree", h.degree()}, {"coeffs_over_alpha", coeffs}});
  }
  doc["factorization"] = fac;
  json principal = json::array();
  for (std::size_t i = 0; i < lat.principal.size(); ++i)
    principal.push_back({{"index", i + 1}, {"partition", run_detail::parts_json(lat.principal[i].partition)}});
  doc["principal"] = principal;
  json subs = json::array();
  for (const auto& rec : lat.records) {
    json idx = json::array();
    for (auto j : rec.subfield_poly_part) idx.push_back(j + 1);
    json gens = json::array();
    for (const auto& g : rec.generators) gens.push_back(element_coords(K, g));
    subs.push_back({{"partition", run_detail::parts_json(rec.partition)},
                    {"degree", rec.degree},
                    {"subfield_poly_factor_indices", idx},
                    {"generators", gens}});
  }
  doc["subfields"] = subs;
  json edges = json::array();
  for (const auto& [a, b] : lat.edges) edges.push_back({a, b});
  doc["hasse_edges"] = edges;
  doc["verified"] = rep.verified;
  return doc.dump(2) + "\n";
}

inline std::string to_dot(const Report& rep) {
  const auto& lat = rep.lattice;
  std::ostringstream out;
  out << "digraph subfields {\n  rankdir=BT;\n";
  for (std::size_t k = 0; k < lat.records.size(); ++k)
    out << "  s" << k << " [label=\"deg " << lat.records[k].degree << "\"];\n";
  for (const auto& [a, b] : lat.edges) out << "  s" << a << " -> s" << b << ";\n";
  // Records are sorted by degree: Q first, K last.
  if (!lat.records.empty()) {
    out << "  { rank=min; s0; }\n";
    out << "  { rank=max; s" << lat.records.size() - 1 << "; }\n";
  }
  out << "}\n";
  return out.str();
}

inline std::string to_text(const Report& rep) {
  const auto& lat = rep.lattice;
  const auto& K = lat.field();
  std::ostringstream out;
  out << "f = " << format_zpoly(rep.model.input) << ", degree " << K.degree() << "\n";
  if (rep.model.scale != 1)
    out << "a = " << rep.model.scale.get_str() << " * (root of f), minimal polynomial "
        << format_zpoly(rep.model.monic) << "\n";
  out << "factors of f over K = Q(a) (r = " << lat.sf.r() << "):\n";
  for (std::size_t j = 0; j < lat.sf.r(); ++j)
    out << "  f" << j + 1 << " = " << format_kpoly(lat.sf.factors[j]) << "\n";
  out << "principal partitions (mod " << lat.prime.p << "):\n";
  for (std::size_t i = 0; i < lat.principal.size(); ++i)
    out << "  P" << i + 1 << " = " << lat.principal[i].partition.to_string() << "\n";
  out << "subfields (m = " << lat.records.size() << "):\n";
  for (std::size_t k = 0; k < lat.records.size(); ++k) {
    const auto& rec = lat.records[k];
    out << "  [" << k << "] degree " << rec.degree << "  " << rec.partition.to_string()
        << "  subfield polynomial " << run_detail::factor_list(rec.subfield_poly_part) << "\n";
    if (rep.generators) {
      out << "      generated by:";
      if (rec.generators.empty()) out << " (none needed)";
      for (std::size_t g = 0; g < rec.generators.size(); ++g)
        out << (g ? ", " : " ") << format_element(rec.generators[g]);
      out << "\n";
    }
  }
  out << "inclusions:\n";
  for (const auto& [a, b] : lat.edges) out << "  [" << a << "] < [" << b << "]\n";
  out << "verified: " << (rep.verified ? "yes" : "no") << "\n";
  return out.str();
}

inline RunResult run(const RunConfig& cfg) {
  RunResult res;
  ZPoly g;
  try {
    g = parse_polynomial(cfg.input);
  } catch (const ParseError& e) {
    res.exit_code = exit_parse;
    res.diagnostics = std::string("parse error: ") + e.what() + "\n";
    return res;
  }
  if (g.degree() < 1) {
    res.exit_code = exit_parse;
    res.diagnostics = "parse error: polynomial must have degree >= 1\n";
    return res;
  }
  if (g.degree() > cfg.max_degree) {
    res.exit_code = exit_degree_guard;
    res.diagnostics = "degree " + std::to_string(g.degree()) + " exceeds --max-degree " +
                      std::to_string(cfg.max_degree) + "\n";
    return res;
  }
  try {
    MonicModel model = to_monic_model(g);
    NumberField K(model.monic);
    LatticeOptions opt;
    opt.seed = cfg.seed;
    opt.threads = cfg.threads;
    opt.prime = cfg.prime;
    opt.generators = cfg.generators;
    Report rep{model, all_subfields(K, opt), cfg.generators, false};
    if (cfg.verify) {
      std::vector<VerifyReport> reports(rep.lattice.records.size());
      lattice_detail::parallel_for(reports.size(), cfg.threads, [&](std::size_t k) {
        reports[k] = verify_record(rep.lattice, rep.lattice.records[k]);
      });
      rep.verified = true;
      for (std::size_t k = 0; k < reports.size(); ++k) {
        if (reports[k].ok()) continue;
        rep.verified = false;
        res.diagnostics += "subfield [" + std::to_string(k) + "] failed verification: " + reports[k].detail + "\n";
      }
    }
    switch (cfg.format) {
      case Format::json: res.output = to_json(rep); break;
      case Format::dot: res.output = to_dot(rep); break;
      case Format::text: res.output = to_text(rep); break;
    }
    if (cfg.verify && !rep.verified) res.exit_code = exit_defect;
  } catch (const ReducibleInput&) {
    res.exit_code = exit_reducible;
    res.diagnostics = std::string("f must be irreducible over Q: ") + format_zpoly(g) + "\n";
  } catch (const InvalidArgument& e) {
    res.exit_code = exit_parse;
    res.diagnostics = std::string("invalid argument: ") + e.what() + "\n";
  } catch (const std::exception& e) {
    res.exit_code = exit_defect;
    res.diagnostics = std::string("internal error: ") + e.what() + "\n";
  }
  return res;
}

}  // namespace subfields::cli
