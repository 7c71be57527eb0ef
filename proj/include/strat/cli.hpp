#pragma once

/**
 * @file cli.hpp
 * @brief The `stratify` command line: JSON in, JSON reports out.
 *
 * Exit codes: 0 success, 1 false verdict under --strict, 2 validation
 * failure, 3 parse failure, 4 unsupported backend or feature.
 */

#include <CLI11.hpp>

#include "strat/json_io.hpp"

namespace strat::cli {

using json_io::json;

enum ExitCode : int { kOk = 0, kFalse = 1, kInvalid = 2, kParse = 3, kUnsupported = 4 };

namespace detail {

struct Options {
  std::string ring, output;
  bool strict = false;

  std::string complex, other, ideal, module, order, at, panel, target, backend = "auto";
  std::vector<std::string> gens;
  bool global = false, exact = false;
};

inline json conditional_json(const std::vector<Ideal>& asserted) {
  json out = json::array();
  for (const auto& I : asserted) out.push_back(json_io::canonical_json(I));
  return out;
}

inline std::vector<std::size_t> parse_order(const std::string& text) {
  std::vector<std::size_t> perm;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      std::size_t used = 0;
      long v = std::stol(tok, &used);
      if (used != tok.size() || v < 0) throw std::invalid_argument(tok);
      perm.push_back(static_cast<std::size_t>(v));
    } catch (const std::exception&) {
      throw ParseError("--order expects a comma-separated permutation such as 1,0");
    }
  }
  return perm;
}

inline std::vector<PanelEntry> panel_from_json(const Ring& ring, const json& j) {
  if (!j.is_array()) throw ParseError("a panel must be an array of ideals");
  std::vector<PanelEntry> panel;
  for (const auto& e : j) {
    Ideal I = json_io::ideal_from_json(ring, e);
    if (I.is_unit()) throw ValidationError(0, "panel ideals must be proper");
    auto verdict = check_prime(I);
    bool asserted = json_io::asserted_prime(e);
    if (verdict && !*verdict && asserted) throw ValidationError(0, "an asserted prime is provably not prime");
    if ((verdict && *verdict) || asserted) panel.push_back(PanelEntry::prime(PrimeIdeal::make(I, asserted)));
    else panel.push_back(PanelEntry::locus(gb(I)));
  }
  return panel;
}

inline json support_json(const SupportReport& rep, const Ring& ring) {
  json per = json::object();
  for (const auto& [n, c] : rep.per_degree) per[std::to_string(n)] = json_io::canonical_json(c.ideal());
  json j{{"components", json_io::to_json(rep.global)}, {"per_degree", per}};
  if (ring.is_integer_ring()) {
    json primes = json::array();
    for (const auto& c : rep.global.components()) {
      const auto& b = c.ideal().groebner_basis();
      primes.push_back(b.empty() ? "0" : to_string(b[0]));
    }
    j["primes"] = primes;
  }
  j["conditional_on"] = json::array();
  return j;
}

inline json lgp_json(const LgpCertificate& cert) {
  json entries = json::array();
  for (const auto& e : cert.entries) {
    json row = json_io::canonical_json(e.point.ideal);
    row["kind"] = e.point.is_prime ? "prime" : "locus";
    if (e.point.asserted) row["asserted_prime"] = true;
    row["target_in_support"] = e.target_in_support;
    json g = json::array();
    for (bool b : e.generator_in_support) g.push_back(b);
    row["generators_in_support"] = g;
    row["local_member"] = e.local_member;
    row["residue_member"] = e.residue_member;
    entries.push_back(std::move(row));
  }
  json witnesses = json::array();
  for (const auto& w : cert.witnesses) witnesses.push_back(json_io::canonical_json(w));
  json errors = json::array();
  for (const auto& s : cert.panel_errors) errors.push_back(s);
  return json{{"verdict", cert.verdict},
              {"consistent", cert.consistent},
              {"conditions", {{"global", cert.global_member}, {"local", cert.all_local}, {"residue", cert.all_residue}}},
              {"panel", entries},
              {"witnesses", witnesses},
              {"panel_errors", errors},
              {"conditional_on", conditional_json(cert.conditional_on)}};
}

inline SupportBackend backend_of(const std::string& name) {
  if (name == "auto") return SupportBackend::Automatic;
  if (name == "euclidean") return SupportBackend::Euclidean;
  if (name == "groebner") return SupportBackend::Groebner;
  throw ParseError("--backend must be auto, euclidean or groebner");
}

/// Runs one command; returns the report and whether a boolean verdict was false.
inline std::pair<json, bool> dispatch(const std::string& cmd, const Options& o) {
  Ring ring = json_io::ring_from_json(json_io::load(o.ring));
  auto complex = [&](const std::string& arg) { return json_io::complex_from_json(ring, json_io::load(arg)); };

  if (cmd == "check") {
    complex(o.complex);
    return {json{{"ok", true}}, false};
  }
  if (cmd == "support") {
    FreeComplex X = complex(o.complex);
    if (!o.at.empty()) {
      if (o.global) throw ParseError("--at and --global are exclusive");
      PrimeIdeal p = json_io::prime_from_json(ring, json_io::load(o.at));
      bool in = in_support(X, p);
      json asserted = json::array();
      if (!p.verified()) asserted.push_back(json_io::canonical_json(p.ideal()));
      return {json{{"in_support", in}, {"prime", json_io::to_json(p)}, {"conditional_on", asserted}}, !in};
    }
    return {support_json(support_global(X, backend_of(o.backend)), ring), false};
  }
  if (cmd == "koszul") {
    FreeComplex X = complex(o.complex);
    Ideal I = json_io::ideal_from_json(ring, json_io::load(o.ideal));
    std::vector<std::size_t> perm;
    if (!o.order.empty()) perm = parse_order(o.order);
    return {json_io::to_json(koszul_ideal(X, I.generators(), perm)), false};
  }
  if (cmd == "thick" || cmd == "lgp") {
    ThickQuery q{complex(o.target), {}};
    for (const auto& g : o.gens) q.generators.push_back(complex(g));
    if (cmd == "thick") {
      bool member = thick_member(q);
      return {json{{"member", member}, {"conditional_on", json::array()}}, !member};
    }
    auto panel = o.panel.empty() ? default_panel(q) : panel_from_json(ring, json_io::load(o.panel));
    auto cert = verify_lgp(q, panel);
    if (!cert.panel_errors.empty()) {
      std::string msg = "panel does not cover the supports";
      for (const auto& s : cert.panel_errors) msg += "; " + s;
      throw ValidationError(0, msg);
    }
    if (!cert.consistent) throw CertificationError("local-global conditions disagree");
    return {lgp_json(cert), !cert.verdict};
  }
  if (cmd == "homvanish") {
    FreeComplex X = complex(o.complex), Y = complex(o.other);
    bool v = hom_vanishes(X, Y);
    json j{{"vanishes", v}, {"exact_mode", o.exact}};
    if (o.exact) {
      auto rep = supp_hom_check(X, Y);
      if (rep.hom.empty() != v || !rep.equal) throw CertificationError("exact Hom disagrees with the support test");
      json degs = json::object();
      for (const auto& [n, M] : rep.hom) degs[std::to_string(n)] = json_io::to_json(M, ring);
      j["hom_degrees"] = degs;
      j["hom_support"] = json_io::to_json(rep.hom_support);
    }
    j["conditional_on"] = json::array();
    return {j, !v};
  }
  if (cmd == "torsion") {
    auto M = json_io::module_from_json(ring, json_io::load(o.module));
    Ideal a = json_io::ideal_from_json(ring, json_io::load(o.ideal));
    auto T = torsion_submodule(M, a);
    json j = json_io::to_json(T);
    j["fitting_ideal"] = json_io::canonical_json(fitting_ideal(T));
    return {j, false};
  }
  if (cmd == "cohomology") {
    FreeComplex X = complex(o.complex);
    if (!ring.is_euclidean()) throw Unsupported("cohomology reports need Z or a univariate ring over a field");
    json degs = json::object();
    for (const auto& [n, M] : cohomology_pid(X)) degs[std::to_string(n)] = json_io::to_json(M, ring);
    return {json{{"degrees", degs}}, false};
  }
  throw ParseError("unknown command " + cmd);
}

}  // namespace detail

/// Entry point shared by the binary and the tests. `args` excludes the program name.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  detail::Options o;
  CLI::App app{"Supports, thick subcategories and the local-global principle for perfect complexes", "stratify"};
  app.option_defaults()->always_capture_default(false);
  app.add_option("--ring", o.ring, "ring descriptor (file or inline JSON)")->required();
  app.add_option("--output", o.output, "write the report here instead of stdout");
  app.add_flag("--strict", o.strict, "exit 1 when a boolean verdict is false");
  app.require_subcommand(1);

  auto* check = app.add_subcommand("check", "validate a complex");
  check->add_option("complex", o.complex)->required();

  auto* support = app.add_subcommand("support", "support of a complex, globally or at a prime");
  support->add_option("complex", o.complex)->required();
  support->add_option("--at", o.at, "prime ideal");
  support->add_flag("--global", o.global);
  support->add_option("--backend", o.backend, "auto, euclidean or groebner");

  auto* koszul = app.add_subcommand("koszul", "Koszul object X//a");
  koszul->add_option("complex", o.complex)->required();
  koszul->add_option("ideal", o.ideal)->required();
  koszul->add_option("--order", o.order, "generator permutation, e.g. 1,0");

  auto* thick = app.add_subcommand("thick", "membership of the target in Thick(generators)");
  thick->add_option("--target", o.target)->required();
  thick->add_option("--gen", o.gens);

  auto* hom = app.add_subcommand("homvanish", "whether Hom^*(X, Y) vanishes");
  hom->add_option("X", o.complex)->required();
  hom->add_option("Y", o.other)->required();
  hom->add_flag("--exact", o.exact, "also compute Hom^* exactly (Euclidean rings)");

  auto* lgp = app.add_subcommand("lgp", "local-global certificate");
  lgp->add_option("--target", o.target)->required();
  lgp->add_option("--gen", o.gens);
  lgp->add_option("--panel", o.panel, "array of ideals; defaults to the support components and (0)");

  auto* torsion = app.add_subcommand("torsion", "torsion submodule of a presented module");
  torsion->add_option("module", o.module)->required();
  torsion->add_option("ideal", o.ideal)->required();

  auto* coh = app.add_subcommand("cohomology", "cohomology modules over a Euclidean ring");
  coh->add_option("complex", o.complex)->required();

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kParse;
  }

  std::string cmd = app.get_subcommands().front()->get_name();
  auto fail = [&](int code, const std::string& kind, const std::string& msg, std::optional<int> degree) {
    json j{{"ok", false}, {"error", kind}, {"message", msg}};
    if (degree) j["degree"] = *degree;
    out << j.dump(2) << "\n";
    err << "error: " << msg << "\n";
    return code;
  };
  try {
    auto [report, is_false] = detail::dispatch(cmd, o);
    std::string text = report.dump(2) + "\n";
    if (o.output.empty()) {
      out << text;
    } else {
      std::ofstream f(o.output);
      if (!f) throw ParseError("cannot write " + o.output);
      f << text;
    }
    return o.strict && is_false ? kFalse : kOk;
  } catch (const ParseError& e) {
    return fail(kParse, "parse", e.what(), std::nullopt);
  } catch (const Unsupported& e) {
    return fail(kUnsupported, "unsupported", e.what(), std::nullopt);
  } catch (const ValidationError& e) {
    return fail(kInvalid, "validation", e.what(), e.degree());
  } catch (const Error& e) {
    return fail(kInvalid, "validation", e.what(), std::nullopt);
  }
}

}  // namespace strat::cli
