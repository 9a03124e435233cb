#pragma once

// JSON dump of ideals: variable names, field, order and each generator as a
// list of [exponent vector, coefficient string] pairs in canonical term order.
// Loading a dump and dumping it again reproduces the same bytes.

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

#include "sympow/errors.hpp"
#include "sympow/field.hpp"
#include "sympow/ideal.hpp"

namespace sympow {

inline constexpr int kDumpVersion = 1;

inline MonomialOrder parse_order(const std::string& name) {
  if (name == "grevlex") return MonomialOrder::grevlex();
  if (name == "grlex") return MonomialOrder::grlex();
  if (name == "lex") return MonomialOrder::lex();
  if (name.rfind("elim(", 0) == 0 && name.back() == ')') {
    try {
      return MonomialOrder::elimination(std::stoul(name.substr(5, name.size() - 6)));
    } catch (const std::logic_error&) {
    }
  }
  throw ArgumentError("unknown monomial order '" + name + "'");
}

template <class F>
F parse_field(const std::string& name);

template <>
inline RationalField parse_field<RationalField>(const std::string& name) {
  if (name != "QQ") throw ArgumentError("expected field QQ, got '" + name + "'");
  return RationalField();
}

template <>
inline PrimeField parse_field<PrimeField>(const std::string& name) {
  if (name.rfind("GF(", 0) != 0 || name.back() != ')') throw ArgumentError("expected field GF(p), got '" + name + "'");
  try {
    return PrimeField(static_cast<std::uint32_t>(std::stoul(name.substr(3, name.size() - 4))));
  } catch (const std::logic_error&) {
    throw ArgumentError("bad prime in field name '" + name + "'");
  }
}

template <class F>
nlohmann::json polynomial_to_json(const Polynomial<F>& p) {
  nlohmann::json terms = nlohmann::json::array();
  const auto n = p.ring()->size();
  for (const auto& t : p.terms()) {
    std::vector<unsigned> exps(n);
    for (std::size_t i = 0; i < n; ++i) exps[i] = t.monomial[i];
    terms.push_back(nlohmann::json::array({exps, p.field().to_string(t.coef)}));
  }
  return terms;
}

template <class F>
Polynomial<F> polynomial_from_json(const RingPtr<F>& ring, const nlohmann::json& j) {
  if (!j.is_array()) throw ArgumentError("polynomial dump: expected an array of terms");
  std::vector<Term<F>> terms;
  for (const auto& t : j) {
    if (!t.is_array() || t.size() != 2) throw ArgumentError("polynomial dump: malformed term");
    auto exps = t[0].get<std::vector<int>>();
    if (exps.size() != ring->size()) throw ArgumentError("polynomial dump: exponent vector length mismatch");
    terms.push_back({Monomial::from_exponents(exps), ring->field().parse(t[1].get<std::string>())});
  }
  return Polynomial<F>::from_terms(ring, std::move(terms));
}

template <class F>
nlohmann::json ideal_to_json(const Ideal<F>& I) {
  const auto& ring = *I.ring();
  nlohmann::json gens = nlohmann::json::array();
  for (const auto& g : I.generators()) gens.push_back(polynomial_to_json(g));
  nlohmann::json out;
  out["format"] = "sympow-ideal";
  out["version"] = kDumpVersion;
  out["variables"] = ring.names();
  out["field"] = ring.field().name();
  out["order"] = ring.order().name();
  out["generators"] = std::move(gens);
  return out;
}

template <class F>
Ideal<F> ideal_from_json(const nlohmann::json& j) {
  try {
    if (j.at("format") != "sympow-ideal") throw ArgumentError("not a sympow-ideal document");
    if (j.at("version") != kDumpVersion) throw ArgumentError("unsupported dump version");
    auto ring = make_ring<F>(j.at("variables").get<std::vector<std::string>>(),
                             parse_field<F>(j.at("field").get<std::string>()),
                             parse_order(j.at("order").get<std::string>()));
    Ideal<F> I(ring);
    for (const auto& g : j.at("generators")) I.add(polynomial_from_json(ring, g));
    return I;
  } catch (const nlohmann::json::exception& e) {
    throw ArgumentError(std::string("ideal dump: ") + e.what());
  }
}

template <class F>
std::string dump_ideal(const Ideal<F>& I) {
  return ideal_to_json(I).dump();
}

template <class F>
Ideal<F> load_ideal(const std::string& text) {
  try {
    return ideal_from_json<F>(nlohmann::json::parse(text));
  } catch (const nlohmann::json::parse_error& e) {
    throw ArgumentError(std::string("ideal dump: ") + e.what());
  }
}

}  // namespace sympow
