#pragma once

// JSON encodings shared by the CLI and tests.
//
// Polynomials: ascending integer arrays (1 + t^2 -> [1,0,1]). When a
// coefficient does not fit in a signed 64-bit integer the whole array is
// written as decimal strings; readers accept both forms.
// FactoredChar: {"k": e_k, ...}. Big scalars: decimal strings.

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include <json.hpp>

#include "nilcone/chain.hpp"
#include "nilcone/hecke.hpp"
#include "nilcone/multgl.hpp"
#include "nilcone/polyalg.hpp"

namespace nilcone {

using json = nlohmann::json;

inline bool fits_int64(const BigInt& v) {
  return v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max();
}

inline json coeffs_to_json(const std::vector<BigInt>& coeffs) {
  json arr = json::array();
  const bool small = std::all_of(coeffs.begin(), coeffs.end(), fits_int64);
  for (const auto& c : coeffs) {
    if (small) {
      arr.push_back(static_cast<std::int64_t>(c));
    } else {
      arr.push_back(c.str());
    }
  }
  return arr;
}

inline json to_json(const IntPoly& p) { return coeffs_to_json(p.coeffs()); }
inline json to_json(const TruncatedSeries& s) { return coeffs_to_json(s.coeffs()); }

inline json to_json(const FactoredChar& f) {
  json obj = json::object();
  for (const auto& [k, e] : f.factors()) obj[std::to_string(k)] = e;
  return obj;
}

inline json to_json(const MultResult& m) {
  json j;
  const IntPoly* p = m.polynomial();
  j["polynomial"] = p ? to_json(*p) : json(nullptr);
  const auto w = m.witness_degree();
  j["not_polynomial_witness_degree"] = w ? json(*w) : json(nullptr);
  const auto v = m.value_at_1();
  j["value_at_1"] = v ? json(v->str()) : json(nullptr);
  j["palindromic"] = m.palindromic();
  j["factored"] = to_json(m.factored);
  return j;
}

inline json to_json(const Divisor& d) {
  json obj = json::object();
  for (const auto& [p, m] : d.mults()) obj[p] = m;
  return obj;
}

inline json to_json(const ChainHiggsBundle& c) {
  json zeros = json::array();
  for (const auto& z : c.zeros()) zeros.push_back(to_json(z));
  return json{{"genus", c.genus()}, {"degrees", c.degrees()}, {"delta0", to_json(c.delta0())}, {"zeros", zeros}};
}

inline json to_json(const WeightDims& w) {
  json obj = json::object();
  for (const auto& [k, d] : w) obj[std::to_string(k)] = d;
  return obj;
}

namespace detail {

[[noreturn]] inline void parse_fail(const std::string& field, const std::string& msg) {
  throw DomainError("parse_error", field, msg);
}

inline std::int64_t get_int(const json& j, const std::string& field) {
  if (!j.is_number_integer()) parse_fail(field, field + " must be an integer");
  return j.get<std::int64_t>();
}

inline Divisor divisor_from_json(const json& j, const std::string& field) {
  if (!j.is_object()) parse_fail(field, field + " must be an object of label -> multiplicity");
  Divisor d;
  for (const auto& [label, mult] : j.items()) d.add(label, get_int(mult, field + "." + label));
  return d;
}

}  // namespace detail

inline BigInt bigint_from_json(const json& j, const std::string& field) {
  if (j.is_number_integer()) return BigInt(j.get<std::int64_t>());
  if (j.is_string()) {
    try {
      return BigInt(j.get<std::string>());
    } catch (const std::exception&) {
    }
  }
  detail::parse_fail(field, field + " must be an integer or a decimal string");
}

inline IntPoly poly_from_json(const json& j, const std::string& field = "polynomial") {
  if (!j.is_array()) detail::parse_fail(field, field + " must be an array of coefficients");
  std::vector<BigInt> c;
  for (std::size_t i = 0; i < j.size(); ++i) c.push_back(bigint_from_json(j[i], field + "[" + std::to_string(i) + "]"));
  return IntPoly(std::move(c));
}

/// {"genus": g, "degrees": [...], "delta0": {...}, "zeros": [{...}, ...]}
inline ChainHiggsBundle chain_from_json(const json& j) {
  if (!j.is_object()) detail::parse_fail("chain", "chain must be a JSON object");
  for (const char* key : {"genus", "degrees", "zeros"}) {
    if (!j.contains(key)) detail::parse_fail(key, std::string("missing field '") + key + "'");
  }
  const auto genus = detail::get_int(j["genus"], "genus");
  if (!j["degrees"].is_array()) detail::parse_fail("degrees", "degrees must be an array");
  std::vector<std::int64_t> degrees;
  for (const auto& d : j["degrees"]) degrees.push_back(detail::get_int(d, "degrees"));
  Divisor delta0 = j.contains("delta0") ? detail::divisor_from_json(j["delta0"], "delta0") : Divisor{};
  if (!j["zeros"].is_array()) detail::parse_fail("zeros", "zeros must be an array");
  std::vector<Divisor> zeros;
  for (std::size_t i = 0; i < j["zeros"].size(); ++i) {
    zeros.push_back(detail::divisor_from_json(j["zeros"][i], "zeros[" + std::to_string(i) + "]"));
  }
  return ChainHiggsBundle(static_cast<int>(genus), std::move(degrees), std::move(delta0), std::move(zeros));
}

/// [{"op": "remove"|"add", "i_or_k": int, "point": "label"}, ...]
inline std::vector<HeckeMove> moves_from_json(const json& j) {
  if (!j.is_array()) detail::parse_fail("moves", "moves must be an array");
  std::vector<HeckeMove> out;
  for (std::size_t s = 0; s < j.size(); ++s) {
    const auto& m = j[s];
    const std::string at = "moves[" + std::to_string(s) + "]";
    if (!m.is_object() || !m.contains("op") || !m.contains("i_or_k") || !m.contains("point")) {
      detail::parse_fail(at, at + " needs op, i_or_k and point");
    }
    if (!m["op"].is_string() || !m["point"].is_string()) detail::parse_fail(at, at + ": op and point must be strings");
    const auto op = m["op"].get<std::string>();
    if (op != "remove" && op != "add") detail::parse_fail(at + ".op", "op must be 'remove' or 'add', got '" + op + "'");
    out.push_back(HeckeMove{op == "remove" ? HeckeMove::Op::Remove : HeckeMove::Op::Add,
                            static_cast<int>(detail::get_int(m["i_or_k"], at + ".i_or_k")),
                            m["point"].get<std::string>()});
  }
  return out;
}

inline json to_json(const HeckeMove& m) {
  return json{{"op", m.op == HeckeMove::Op::Remove ? "remove" : "add"}, {"i_or_k", m.index}, {"point", m.point}};
}

}  // namespace nilcone
