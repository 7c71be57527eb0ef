#pragma once

/**
 * @file json_io.hpp
 * @brief JSON schemas for rings, ideals, complexes and module presentations.
 *
 * Coefficients and polynomial entries travel as strings so that nothing is
 * squeezed through a double. Readers throw ParseError for malformed or
 * ill-typed input; structural problems (shapes, d² ≠ 0) surface as
 * ValidationError from the constructors.
 */

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "strat/stratify.hpp"

namespace strat::json_io {

using json = nlohmann::ordered_json;

namespace detail {

inline const json& field(const json& j, const char* key) {
  if (!j.is_object()) throw ParseError(std::string("expected an object with key '") + key + "'");
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(std::string("missing key '") + key + "'");
  return *it;
}

inline std::string entry_text(const json& e) {
  if (e.is_string()) return e.get<std::string>();
  if (e.is_number_integer()) return std::to_string(e.get<long long>());
  throw ParseError("matrix and ideal entries must be strings or integers");
}

inline long long integer_of(const json& e, const char* what) {
  try {
    if (e.is_number_integer()) return e.get<long long>();
    if (e.is_string()) {
      std::size_t used = 0;
      std::string s = e.get<std::string>();
      long long v = std::stoll(s, &used);
      if (used == s.size()) return v;
    }
  } catch (const std::exception&) {
  }
  throw ParseError(std::string("expected an integer for ") + what);
}

inline int degree_of(const std::string& key) {
  try {
    std::size_t used = 0;
    int n = std::stoi(key, &used);
    if (used == key.size()) return n;
  } catch (const std::exception&) {
  }
  throw ParseError("degree keys must be integers, got '" + key + "'");
}

}  // namespace detail

/// Parses JSON text, mapping syntax errors to ParseError.
inline json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

/// Inline JSON when the argument starts with '{' or '[', a file path otherwise.
inline json load(const std::string& arg) {
  auto first = arg.find_first_not_of(" \t\n");
  if (first != std::string::npos && (arg[first] == '{' || arg[first] == '[')) return parse(arg);
  std::ifstream in(arg);
  if (!in) throw ParseError("cannot read " + arg);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse(ss.str());
}

inline Ring ring_from_json(const json& j) {
  const json& base = detail::field(j, "base");
  CoefficientDomain dom = CoefficientDomain::rationals();
  if (base.is_string() && base == "Q") {
  } else if (base.is_string() && base == "Z") {
    dom = CoefficientDomain::integers();
  } else if (base.is_object() && base.contains("Fp")) {
    long long p = detail::integer_of(base["Fp"], "Fp");
    if (p < 2) throw ParseError("Fp modulus must be at least 2");
    try {
      dom = CoefficientDomain::prime_field(static_cast<std::uint64_t>(p));
    } catch (const Unsupported&) {
      throw;
    } catch (const Error& e) {
      throw ParseError(e.what());
    }
  } else {
    throw ParseError("ring base must be \"Q\", \"Z\" or {\"Fp\": p}");
  }
  std::vector<std::string> vars;
  if (j.contains("vars")) {
    if (!j["vars"].is_array()) throw ParseError("vars must be an array of names");
    for (const auto& v : j["vars"]) {
      if (!v.is_string()) throw ParseError("variable names must be strings");
      vars.push_back(v.get<std::string>());
    }
  }
  MonomialOrder order = MonomialOrder::grevlex();
  if (j.contains("order")) {
    const json& o = j["order"];
    if (o == "grevlex") order = MonomialOrder::grevlex();
    else if (o == "lex") order = MonomialOrder::lex();
    else throw ParseError("order must be \"grevlex\" or \"lex\"");
  }
  if (dom.is_integer() && !vars.empty()) throw Unsupported("integer coefficients are only supported for Z itself");
  try {
    return Ring(dom, std::move(vars), order);
  } catch (const Error& e) {
    throw ParseError(e.what());
  }
}

inline json to_json(const Ring& ring) {
  json j;
  const auto& d = ring.domain();
  if (d.is_integer()) j["base"] = "Z";
  else if (d.modulus() == 0) j["base"] = "Q";
  else j["base"] = json{{"Fp", std::to_string(d.modulus())}};
  j["vars"] = ring.vars();
  j["order"] = ring.order().name();
  return j;
}

inline json to_json(const Poly& f) { return to_string(f); }

inline json to_json(const PolyMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

/// Row-major matrix; `cols_if_empty` fixes the width of a matrix with no rows.
inline PolyMatrix matrix_from_json(const Ring& ring, const json& j, std::size_t cols_if_empty = 0) {
  if (!j.is_array()) throw ParseError("a matrix must be an array of rows");
  std::size_t rows = j.size();
  std::size_t cols = cols_if_empty;
  if (rows > 0) {
    if (!j[0].is_array()) throw ParseError("a matrix must be an array of rows");
    cols = j[0].size();
  }
  PolyMatrix m(rows, cols, Poly(ring));
  for (std::size_t i = 0; i < rows; ++i) {
    if (!j[i].is_array() || j[i].size() != cols) throw ParseError("matrix rows have different lengths");
    for (std::size_t k = 0; k < cols; ++k) m(i, k) = parse_poly(ring, detail::entry_text(j[i][k]));
  }
  return m;
}

inline FreeComplex complex_from_json(const Ring& ring, const json& j) {
  const json& rj = detail::field(j, "ranks");
  if (!rj.is_object()) throw ParseError("ranks must be an object keyed by degree");
  std::map<int, std::size_t> ranks;
  for (const auto& [k, v] : rj.items()) {
    long long r = detail::integer_of(v, "a rank");
    if (r < 0) throw ParseError("ranks must be non-negative");
    ranks[detail::degree_of(k)] = static_cast<std::size_t>(r);
  }
  auto rank = [&](int n) {
    auto it = ranks.find(n);
    return it == ranks.end() ? std::size_t{0} : it->second;
  };
  std::map<int, PolyMatrix> diffs;
  if (j.contains("diffs")) {
    const json& dj = j["diffs"];
    if (!dj.is_object()) throw ParseError("diffs must be an object keyed by degree");
    for (const auto& [k, v] : dj.items()) {
      int n = detail::degree_of(k);
      diffs.emplace(n, matrix_from_json(ring, v, rank(n)));
    }
  }
  return FreeComplex(ring, std::move(ranks), std::move(diffs));
}

inline json to_json(const FreeComplex& X) {
  json ranks = json::object(), diffs = json::object();
  for (auto [n, r] : X.ranks()) ranks[std::to_string(n)] = r;
  for (auto [n, r] : X.ranks()) {
    PolyMatrix d = X.d(n);
    if (d.rows() > 0 && !d.is_zero()) diffs[std::to_string(n)] = to_json(d);
  }
  return json{{"ranks", ranks}, {"diffs", diffs}};
}

inline Ideal ideal_from_json(const Ring& ring, const json& j) {
  const json& g = detail::field(j, "gens");
  if (!g.is_array()) throw ParseError("gens must be an array");
  std::vector<Poly> gens;
  for (const auto& e : g) gens.push_back(parse_poly(ring, detail::entry_text(e)));
  return Ideal(ring, std::move(gens));
}

inline bool asserted_prime(const json& j) {
  if (!j.contains("asserted_prime")) return false;
  if (!j["asserted_prime"].is_boolean()) throw ParseError("asserted_prime must be a boolean");
  return j["asserted_prime"].get<bool>();
}

inline PrimeIdeal prime_from_json(const Ring& ring, const json& j) {
  Ideal I = ideal_from_json(ring, j);
  try {
    return PrimeIdeal::make(I, asserted_prime(j));
  } catch (const Error& e) {
    throw ValidationError(0, e.what());
  }
}

inline json to_json(const Ideal& I) {
  json gens = json::array();
  for (const auto& g : I.generators()) gens.push_back(to_string(g));
  return json{{"gens", gens}};
}

/// The reduced Gröbner basis, for reports where a canonical form matters.
inline json canonical_json(const Ideal& I) {
  json gens = json::array();
  for (const auto& g : I.groebner_basis()) gens.push_back(to_string(g));
  return json{{"gens", gens}};
}

inline json to_json(const PrimeIdeal& p) {
  json j = canonical_json(p.ideal());
  if (!p.verified()) j["asserted_prime"] = true;
  return j;
}

/// Module schema: {"generators": g, "relations": g × m matrix whose columns
/// are the relations}.
inline ModulePresentation module_from_json(const Ring& ring, const json& j) {
  long long g = detail::integer_of(detail::field(j, "generators"), "generators");
  if (g < 0) throw ParseError("generators must be non-negative");
  PolyMatrix rel(static_cast<std::size_t>(g), 0, Poly(ring));
  if (j.contains("relations")) {
    const json& r = j["relations"];
    if (r.is_array() && !r.empty()) rel = matrix_from_json(ring, r);
    if (rel.rows() != static_cast<std::size_t>(g))
      throw ValidationError(0, "relation matrix must have one row per generator");
  }
  return ModulePresentation{ring, static_cast<std::size_t>(g), rel};
}

inline json to_json(const ModulePresentation& M) {
  return json{{"generators", M.generators}, {"relations", to_json(M.relations)}};
}

inline json to_json(const FgModulePID& M, const Ring& ring) {
  json torsion = json::array();
  for (const auto& d : M.torsion) torsion.push_back(to_string(d));
  return json{{"free_rank", M.free_rank}, {"torsion", torsion}, {"module", describe(M, ring)}};
}

/// Components as generator lists; over Z they are already split into primes.
inline json to_json(const SpecClosedSet& S) {
  json comps = json::array();
  for (const auto& c : S.components()) comps.push_back(canonical_json(c.ideal()));
  return comps;
}

}  // namespace strat::json_io
