// Copyright 2026 The bigaction Authors
// SPDX-License-Identifier: Apache-2.0

#include "bigaction/json.hpp"

#include "bigaction/error.hpp"

namespace bigaction {

namespace {

[[noreturn]] void bad(const std::string& what) { fail("InvalidJson", what); }

const Json& member(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing key '") + key + "'");
  return j.at(key);
}

uint64_t as_uint(const Json& j, const char* what) {
  if (!j.is_number_integer() || j.get<int64_t>() < 0) bad(std::string(what) + " must be a nonnegative integer");
  return j.get<uint64_t>();
}

Json checks_json(const std::vector<CaseCheck>& checks) {
  Json out = Json::array();
  for (const auto& c : checks) {
    Json e = {{"name", c.name}, {"ok", c.ok}};
    if (!c.ok) {
      e["expected"] = c.expected;
      e["actual"] = c.actual;
    }
    out.push_back(e);
  }
  return out;
}

}  // namespace

Json to_json(const FieldCtx& ctx) { return {{"p", ctx.p()}, {"m", ctx.m()}, {"modulus", ctx.modulus()}}; }

const FieldCtx& ctx_from_json(const Json& j) {
  const uint64_t p = as_uint(member(j, "p"), "p");
  const uint64_t m = j.contains("m") ? as_uint(j.at("m"), "m") : 1;
  if (p < 2 || p > kMaxPrime || !is_prime(p)) bad("p must be a prime below " + std::to_string(kMaxPrime + 1));
  if (m < 1 || m > kMaxExt) bad("m must lie in 1.." + std::to_string(kMaxExt));
  const FieldCtx& ctx = FieldCtx::get(static_cast<uint32_t>(p), static_cast<int>(m));
  if (j.contains("modulus") && j.at("modulus").get<std::vector<uint32_t>>() != ctx.modulus())
    bad("unsupported modulus for " + ctx.name() + "; the library uses " + Json(ctx.modulus()).dump());
  return ctx;
}

Json to_json(const FieldElem& x) { return x.coords(); }

FieldElem elem_from_json(const FieldCtx& ctx, const Json& j) {
  if (j.is_number_integer()) {
    const uint64_t n = as_uint(j, "element index");
    if (ctx.size() && n >= ctx.size()) bad("element index " + std::to_string(n) + " outside " + ctx.name());
    return FieldElem::from_index(ctx, n);
  }
  if (!j.is_array() || j.size() > static_cast<size_t>(ctx.m()))
    bad("an element of " + ctx.name() + " is an array of at most " + std::to_string(ctx.m()) + " coordinates");
  std::vector<uint32_t> c(ctx.m(), 0);
  for (size_t i = 0; i < j.size(); ++i) {
    const uint64_t v = as_uint(j[i], "coordinate");
    if (v >= ctx.p()) bad("coordinate " + std::to_string(v) + " is not reduced mod p");
    c[i] = static_cast<uint32_t>(v);
  }
  return FieldElem::from_coords(ctx, c);
}

Json to_json(const Poly& f) {
  Json out = Json::array();
  for (const auto& c : f.coeffs()) out.push_back(to_json(c));
  return out;
}

Poly poly_from_json(const FieldCtx& ctx, const Json& j) {
  if (!j.is_array()) bad("a polynomial is an array of coefficients");
  std::vector<FieldElem> c;
  for (const auto& e : j) c.push_back(elem_from_json(ctx, e));
  return Poly(ctx, c);
}

Json to_json(const AdditivePoly& a) {
  Json out = Json::array();
  for (const auto& c : a.coeffs()) out.push_back(to_json(c));
  return out;
}

AdditivePoly additive_from_json(const FieldCtx& ctx, const Json& j) {
  if (!j.is_array()) bad("an additive polynomial is an array of F-coefficients");
  std::vector<FieldElem> c;
  for (const auto& e : j) c.push_back(elem_from_json(ctx, e));
  return AdditivePoly(ctx, c);
}

Json to_json(const Int& n) { return n.str(); }

Json to_json(const Rational& r) {
  return {{"num", boost::multiprecision::numerator(r).str()}, {"den", boost::multiprecision::denominator(r).str()}};
}

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  const Json& num = member(j, "num");
  const Json& den = member(j, "den");
  if (!num.is_string() || !den.is_string()) bad("num and den are decimal strings");
  return parse_rational(num.get<std::string>() + "/" + den.get<std::string>());
}

Json to_json(const Surd& s) {
  return {{"a", to_json(s.a())}, {"b", to_json(s.b())}, {"d", to_json(s.radicand())}, {"floor", to_json(s.floor())}};
}

Json to_json(const CoverSpec& spec) {
  Json fs = Json::array();
  for (const auto& f : spec.functions) fs.push_back(to_json(f));
  Json V = Json::array();
  for (const auto& y : spec.V) V.push_back(to_json(y));
  return {{"p", spec.p()}, {"ctx", to_json(*spec.ctx)}, {"functions", fs}, {"V", V}};
}

CoverSpec spec_from_json(const Json& j) {
  const FieldCtx& ctx = ctx_from_json(member(j, "ctx"));
  if (j.contains("p") && as_uint(j.at("p"), "p") != ctx.p()) bad("p disagrees with ctx.p");
  CoverSpec spec;
  spec.ctx = &ctx;
  const Json& fs = member(j, "functions");
  if (!fs.is_array()) bad("functions must be an array");
  for (const auto& f : fs) spec.functions.push_back(poly_from_json(ctx, f));
  if (j.contains("V")) {
    if (!j.at("V").is_array()) bad("V must be an array");
    for (const auto& y : j.at("V")) spec.V.push_back(elem_from_json(ctx, y));
  }
  return spec;
}

Json to_json(const BigActionReport& r) {
  return {{"g", to_json(r.g)},
          {"order_G2", to_json(r.order_G2)},
          {"order_V", to_json(r.order_V)},
          {"order_G", to_json(r.order_G)},
          {"ratio_g", to_json(r.ratio_g)},
          {"ratio_g2", to_json(r.ratio_g2)},
          {"M", to_json(r.M)},
          {"big_action", r.is_big_action},
          {"star", r.satisfies_star},
          {"GM", r.satisfies_GM}};
}

Json to_json(const GroupReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    Json e = {{"name", c.name}, {"ok", c.ok}};
    if (!c.detail.empty()) e["detail"] = c.detail;
    checks.push_back(e);
  }
  return {{"order", r.order},
          {"derived_order", r.derived_order},
          {"center_order", r.center_order},
          {"frattini_order", r.frattini_order},
          {"exponent", r.exponent},
          {"checks", checks}};
}

Json to_json(const CaseReport& r) {
  return {{"case", to_string(r.id)},
          {"s", r.s},
          {"ok", r.ok()},
          {"report", to_json(r.report)},
          {"table_unverifiable", r.table_unverifiable},
          {"notes", r.notes},
          {"checks", checks_json(r.checks)}};
}

Json to_json(const SpecialReport& r) {
  Json out = {{"family", to_string(r.family)}, {"p", r.p}, {"s", r.s}, {"q", to_json(r.q)}};
  if (r.q0 != 0) out["q0"] = to_json(r.q0);
  out["g"] = to_json(r.g);
  out["order_A"] = to_json(r.order_A);
  out["order_S"] = to_json(r.order_S);
  out["order_G2"] = to_json(r.order_G2);
  out["ratio_g"] = to_json(r.ratio_g);
  out["ratio_g2"] = to_json(r.ratio_g2);
  out["big_action"] = r.is_big_action;
  out["star"] = r.satisfies_star;
  return out;
}

Json to_json(const CaseParams& params) {
  Json out = {{"ctx", to_json(*params.ctx)}};
  if (params.s) out["s"] = params.s;
  if (params.d) out["d"] = params.d;
  if (!params.S.empty()) {
    Json S = Json::array();
    for (const auto& c : params.S) S.push_back(to_json(c));
    out["S"] = S;
  }
  Json values = Json::object();
  for (const auto& [k, v] : params.values) values[k] = to_json(v);
  out["values"] = values;
  if (!params.choices.empty()) out["choices"] = params.choices;
  if (!params.constraints.empty()) out["constraints"] = params.constraints;
  return out;
}

CaseParams params_from_json(const Json& j, uint32_t p) {
  if (!j.is_object()) bad("parameters must be a JSON object");
  CaseParams params;
  if (j.contains("ctx")) {
    params.ctx = &ctx_from_json(j.at("ctx"));
    if (p && params.ctx->p() != p) bad("ctx.p disagrees with --p");
  } else {
    if (!p) bad("parameters need a ctx or a prime");
    Json c = {{"p", p}, {"m", j.contains("m") ? j.at("m") : Json(1)}};
    params.ctx = &ctx_from_json(c);
  }
  const FieldCtx& ctx = *params.ctx;
  if (j.contains("s")) params.s = static_cast<int>(as_uint(j.at("s"), "s"));
  if (j.contains("d")) params.d = static_cast<int>(as_uint(j.at("d"), "d"));
  if (j.contains("S")) {
    if (!j.at("S").is_array()) bad("S must be an array");
    for (const auto& c : j.at("S")) params.S.push_back(elem_from_json(ctx, c));
  }
  if (j.contains("values")) {
    if (!j.at("values").is_object()) bad("values must be an object");
    for (const auto& [k, v] : j.at("values").items()) params.values[k] = elem_from_json(ctx, v);
  }
  if (j.contains("choices")) {
    if (!j.at("choices").is_object()) bad("choices must be an object");
    for (const auto& [k, v] : j.at("choices").items()) params.choices[k] = as_uint(v, "choice");
  }
  if (j.contains("constraints")) {
    if (!j.at("constraints").is_array()) bad("constraints must be an array of coordinate forms");
    for (const auto& row : j.at("constraints")) {
      FpVector v;
      if (!row.is_array()) bad("each constraint is an array of integers mod p");
      for (const auto& x : row) {
        const uint64_t a = as_uint(x, "constraint coefficient");
        if (a >= ctx.p()) bad("constraint coefficients must be reduced mod p");
        v.push_back(static_cast<uint32_t>(a));
      }
      params.constraints.push_back(v);
    }
  }
  return params;
}

}  // namespace bigaction
