// Copyright 2026 The bigaction Authors
// SPDX-License-Identifier: Apache-2.0

// Constructors for the case tables. Every constructor keeps its working values
// in one Bag and moves the whole bag whenever a root forces a field extension,
// so all values stay compatible under the (tower-incompatible) embeddings.

#include <algorithm>
#include <functional>
#include <numeric>

#include "bigaction/classify.hpp"
#include "bigaction/error.hpp"
#include "bigaction/ore.hpp"
#include "tables.hpp"

namespace bigaction {

namespace {

using namespace tables;

[[noreturn]] void violated(const std::string& row, const std::string& why) {
  fail("ConstraintViolated", row + ": " + why);
}

Poly mono(const FieldElem& c, uint64_t e) { return Poly::monomial(c, e); }

struct Bag {
  const FieldCtx* ctx = nullptr;
  std::map<std::string, FieldElem> v;
  std::vector<FieldElem> S;

  const FieldElem& operator()(const std::string& name) const {
    auto it = v.find(name);
    if (it == v.end()) fail("InternalError", "missing value " + name);
    return it->second;
  }
  void set(const std::string& name, const FieldElem& x) { v[name] = x; }
  FieldElem zero() const { return FieldElem::zero(*ctx); }
  FieldElem one() const { return FieldElem::one(*ctx); }

  void move_to(const FieldCtx& big) {
    if (&big == ctx) return;
    for (auto& [name, x] : v) x = embed(x, big);
    for (auto& x : S) x = embed(x, big);
    ctx = &big;
  }
};

Bag start(const CaseParams& params) {
  if (!params.ctx) fail("InvalidArgument", "case parameters need a field");
  Bag bag{params.ctx, params.values, params.S};
  for (const auto& [name, x] : bag.v)
    if (x.ctx_ptr() != params.ctx) fail("InvalidArgument", "parameter " + name + " lives in another field");
  for (const auto& x : bag.S)
    if (x.ctx_ptr() != params.ctx) fail("InvalidArgument", "S lives in another field");
  return bag;
}

FieldElem value_or_zero(Bag& bag, const std::string& name) {
  if (!bag.v.count(name)) bag.set(name, bag.zero());
  return bag(name);
}

const FieldElem& required(const Bag& bag, const std::string& name) {
  if (!bag.v.count(name)) violated(name, "missing parameter");
  return bag(name);
}

uint64_t choice(const CaseParams& params, const std::string& name) {
  auto it = params.choices.find(name);
  return it == params.choices.end() ? 0 : it->second;
}

template <class T>
const T& pick(const std::vector<T>& set, const CaseParams& params, const std::string& name) {
  if (set.empty()) fail("EmptyParameterSet", name + " has no admissible value");
  return set[choice(params, name) % set.size()];
}

void check_prime(CaseId id, uint32_t p) {
  const auto& info = case_info(id);
  if (p < info.min_p || (info.max_p && p > info.max_p))
    fail("UnsupportedPrime", to_string(id) + " is not defined for p = " + std::to_string(p));
}

int resolve_s(CaseId id, const CaseParams& params, int from_S) {
  const auto& info = case_info(id);
  int s = params.s ? params.s : (from_S > 0 ? from_S : info.default_s);
  if (from_S > 0 && s != from_S) violated("s", "S has F-degree " + std::to_string(from_S));
  if (s < info.min_s || (info.max_s && s > info.max_s))
    violated("s", "s = " + std::to_string(s) + " outside the range of " + to_string(id));
  return s;
}

// Smallest extension of bag.ctx in which the polynomial has a root; the bag
// moves there. Coefficients are recomputed from the bag in its original field.
std::vector<FieldElem> roots_somewhere(Bag& bag, const std::vector<FieldElem>& coeffs, const std::string& row) {
  const FieldCtx& base = *bag.ctx;
  const int cap = max_ext_degree();
  for (int mm = base.m(); mm <= cap; mm += base.m()) {
    const FieldCtx& big = FieldCtx::get(base.p(), mm);
    std::vector<FieldElem> c;
    for (const auto& x : coeffs) c.push_back(embed(x, big));
    auto roots = field_roots(c);
    if (!roots.empty()) {
      bag.move_to(big);
      return roots;
    }
  }
  fail("EmptyParameterSet", row + " has no root in GF(p^m') for m' <= " + std::to_string(cap));
}

// Root space of an additive polynomial; the bag moves to its splitting field.
std::vector<FieldElem> additive_roots(Bag& bag, const AdditivePoly& a) {
  const RootSpace rs = root_space(a);
  bag.move_to(*rs.ctx);
  return rs.basis;
}

// The subspace of span(basis) cut out by F_p-linear forms on coordinates.
std::vector<FieldElem> cut_subspace(const std::vector<FieldElem>& basis, int k,
                                    const std::vector<FpVector>& constraints) {
  if (k == 0 && constraints.empty()) return basis;
  if (static_cast<int>(basis.size()) < k) violated("V", "root space too small for index p^" + std::to_string(k));
  if (constraints.empty()) return {basis.begin(), basis.end() - k};
  const uint32_t p = basis[0].ctx().p();
  FpMatrix mat(p, constraints.size(), basis.size());
  for (size_t i = 0; i < constraints.size(); ++i) {
    if (constraints[i].size() != basis.size())
      violated("V", "constraint length " + std::to_string(constraints[i].size()) + " != root-space dimension " +
                        std::to_string(basis.size()));
    for (size_t j = 0; j < basis.size(); ++j) mat.at(i, j) = constraints[i][j] % p;
  }
  if (static_cast<int>(fp_rank(mat)) != k)
    violated("V", "constraints must have rank " + std::to_string(k) + " (index p^" + std::to_string(k) + ")");
  std::vector<FieldElem> out;
  for (const auto& kv : fp_kernel(mat)) {
    FieldElem y = FieldElem::zero(basis[0].ctx());
    for (size_t j = 0; j < basis.size(); ++j)
      if (kv[j]) y += basis[j].scale(kv[j]);
    out.push_back(y);
  }
  return out;
}

CoverSpec finish(const Bag& bag, std::vector<Poly> fs, std::vector<FieldElem> V) {
  CoverSpec spec{bag.ctx, std::move(fs), std::move(V)};
  for (auto& f : spec.functions) f = reduce_mod_wp(f).without_constant();
  validate(spec);
  return spec;
}

// f = X S(X) with S = sum S_j F^j.
Poly xs_poly(const std::vector<FieldElem>& S, uint32_t p) {
  Poly f(S[0].ctx());
  for (size_t j = 0; j < S.size(); ++j)
    if (!S[j].is_zero()) f += mono(S[j], 1 + pe(p, static_cast<int>(j)));
  return f;
}

// S from the parameters (default F^s), checked monic of F-degree s.
std::vector<FieldElem> monic_S(const Bag& bag, int s, int d) {
  std::vector<FieldElem> S = bag.S;
  if (S.empty()) {
    S.assign(s + 1, bag.zero());
    S[s] = bag.one();
  }
  if (static_cast<int>(S.size()) != s + 1) violated("S", "expected F-degree " + std::to_string(s));
  if (!S[s].is_one()) violated("S", "S must be monic");
  for (int j = 0; j <= s; ++j)
    if (d > 1 && j % d != 0 && !S[j].is_zero())
      violated("S_1", "coefficient of F^" + std::to_string(j) + " must vanish (only F^{jd} terms, d = " +
                          std::to_string(d) + ")");
  return S;
}

int s_from(const CaseParams& params) { return params.S.empty() ? 0 : static_cast<int>(params.S.size()) - 1; }

// Smallest d >= 2 dividing s with gamma in F_{p^d}.
int gamma_degree(const FieldElem& gamma, int s, int d, const std::string& row) {
  if (gamma.in_prime_field()) violated(row, "gamma must lie outside F_p");
  if (d) {
    if (d < 2 || s % d != 0) violated(row, "d must be >= 2 and divide s");
    if (!gamma.in_subfield(d)) violated(row, "gamma must lie in F_{p^" + std::to_string(d) + "}");
    return d;
  }
  for (int e = 2; e <= s; ++e)
    if (s % e == 0 && gamma.in_subfield(e)) return e;
  violated(row, "gamma lies in no F_{p^d} with d | s");
}

// ---------------------------------------------------------------- P1

CoverSpec build_p1(CaseId id, const CaseParams& params, int k) {
  Bag bag = start(params);
  const uint32_t p = bag.ctx->p();
  const int s = resolve_s(id, params, s_from(params));
  const auto S = monic_S(bag, s, 0);
  const FieldElem c = value_or_zero(bag, "c_1");
  const Poly f = xs_poly(S, p) + mono(c, 1);
  const auto basis = additive_roots(bag, palindromic(f));
  return finish(bag, {embed(f, *bag.ctx)}, cut_subspace(basis, k, params.constraints));
}

// ---------------------------------------------------------------- P2T, P3T

CoverSpec build_gamma_family(CaseId id, const CaseParams& params, int n, int k) {
  Bag bag = start(params);
  const uint32_t p = bag.ctx->p();
  const int s = resolve_s(id, params, s_from(params));
  const std::vector<std::string> gnames = n == 2 ? std::vector<std::string>{"gamma"}
                                                 : std::vector<std::string>{"gamma2", "gamma3"};
  const std::vector<std::string> cnames = n == 2 ? std::vector<std::string>{"b_1"}
                                                 : std::vector<std::string>{"b_1", "c_1"};
  int d = params.d;
  for (const auto& g : gnames) d = std::max(d, gamma_degree(required(bag, g), s, params.d, g));
  for (const auto& g : gnames)
    if (!bag(g).in_subfield(d)) violated(g, "gamma parameters must share F_{p^" + std::to_string(d) + "}");
  if (n == 3) {
    std::vector<FieldElem> lead{bag.one(), bag("gamma2"), bag("gamma3")};
    if (fp_rank_of(lead) != 3)
      violated("gamma3", "1, gamma2, gamma3 must be F_p-independent, which needs d >= 3");
  }
  const auto S = monic_S(bag, s, d);
  const Poly f1 = xs_poly(S, p);
  std::vector<Poly> fs{f1};
  for (size_t i = 0; i < gnames.size(); ++i) fs.push_back(f1 * bag(gnames[i]) + mono(value_or_zero(bag, cnames[i]), 1));
  const auto basis = additive_roots(bag, palindromic(f1));
  for (auto& f : fs) f = embed(f, *bag.ctx);
  return finish(bag, fs, cut_subspace(basis, k, params.constraints));
}

// f = lambda X^{1+p^s} + lambda^{p^{s-1}} X^{1+p^{s-1}}, lambda in F_{p^{2s-1}}:
// Ad_f = (F + beta)(F^{2s-1} + 1).
CoverSpec build_linear_factor_family(CaseId id, const CaseParams& params, int k) {
  Bag bag = start(params);
  const uint32_t p = bag.ctx->p();
  const int s = resolve_s(id, params, 0);
  std::vector<Poly> fs;
  for (const char* name : {"lambda1", "lambda2"}) {
    const FieldElem& l = required(bag, name);
    if (l.is_zero() || !l.in_subfield(2 * s - 1))
      violated(name, "must be a nonzero element of F_{p^" + std::to_string(2 * s - 1) + "}");
    fs.push_back(mono(l, 1 + pe(p, s)) + mono(l.frob(s - 1), 1 + pe(p, s - 1)));
  }
  if (fp_rank_of({bag("lambda1"), bag("lambda2")}) != 2) violated("lambda2", "lambda1, lambda2 must be F_p-independent");
  fs[1] += mono(value_or_zero(bag, "b_1"), 1);
  const AdditivePoly T = ore_right_gcd(palindromic(fs[0]), palindromic(fs[1]));
  if (T.deg() != 2 * s - 1) violated("T", "Ad_f1 and Ad_f2 share a factor of degree " + std::to_string(T.deg()));
  const auto basis = additive_roots(bag, T);
  for (auto& f : fs) f = embed(f, *bag.ctx);
  return finish(bag, fs, cut_subspace(basis, k, params.constraints));
}

// f = lambda (X^{1+p^s} + ...) with Ad_f = (alpha F^2 + beta F + delta)(F^{2s-2} + 1):
// f = lambda X^{1+p^s} + mu X^{1+p^{s-1}} + lambda^{p^{s-2}} X^{1+p^{s-2}},
// lambda in F_{p^{2s-2}}, mu in F_{p^{s-1}}.
CoverSpec build_quadratic_factor_family(CaseId id, const CaseParams& params) {
  Bag bag = start(params);
  const uint32_t p = bag.ctx->p();
  const int s = resolve_s(id, params, 0);
  std::vector<Poly> fs;
  for (const char* idx : {"1", "2"}) {
    const std::string ln = std::string("lambda") + idx, mn = std::string("mu") + idx;
    const FieldElem& l = required(bag, ln);
    const FieldElem mu = value_or_zero(bag, mn);
    if (l.is_zero() || !l.in_subfield(2 * s - 2))
      violated(ln, "must be a nonzero element of F_{p^" + std::to_string(2 * s - 2) + "}");
    if (!mu.in_subfield(s - 1)) violated(mn, "must lie in F_{p^" + std::to_string(s - 1) + "}");
    fs.push_back(mono(l, 1 + pe(p, s)) + mono(mu, 1 + pe(p, s - 1)) + mono(l.frob(s - 2), 1 + pe(p, s - 2)));
  }
  if (fp_rank_of({bag("lambda1"), bag("lambda2")}) != 2) violated("lambda2", "lambda1, lambda2 must be F_p-independent");
  fs[1] += mono(value_or_zero(bag, "b_1"), 1);
  const AdditivePoly T = ore_right_gcd(palindromic(fs[0]), palindromic(fs[1]));
  if (T.deg() != 2 * s - 2) violated("T", "Ad_f1 and Ad_f2 share a factor of degree " + std::to_string(T.deg()));
  const auto basis = additive_roots(bag, T);
  for (auto& f : fs) f = embed(f, *bag.ctx);
  return finish(bag, fs, cut_subspace(basis, 0, params.constraints));
}

// The printed parametrization of (a)-2-ii for s = 2.
CoverSpec build_a2ii_s2(const CaseParams& params) {
  Bag bag = start(params);
  const uint32_t p = bag.ctx->p();
  const FieldElem A = value_or_zero(bag, "a_1+p");
  const FieldElem a2 = value_or_zero(bag, "a_2");
  value_or_zero(bag, "b_1");
  // w in Z(X^{1+p+p^2+p^3} - a_{1+p}^p X^{1+p+p^2} + a_2^p X^{1+p} - a_{1+p} X + 1)
  {
    std::vector<FieldElem> c(1 + pe(p, 1) + pe(p, 2) + pe(p, 3) + 1, bag.zero());
    c[1 + p + p * p + p * p * p] = bag.one();
    c[1 + p + p * p] -= A.frob(1);
    c[1 + p] += a2.frob(1);
    c[1] -= A;
    c[0] += bag.one();
    const auto ws = roots_somewhere(bag, c, "w");
    bag.set("w", pick(ws, params, "w"));
  }
  const FieldElem w = bag("w"), Ab = bag("a_1+p"), a2b = bag("a_2");
  // b_{1+p^2} in Z(w^{p^2} X^{p^3} + w^p(-a_2^p + a_{1+p}^p w^{p^2} - w^{p^2+p^3}) X^{p^2}
  //                 + (a_{1+p} - w^{p^2}) X^p - w^{-1} X) - F_{p^2}
  const AdditivePoly P(*bag.ctx, {-w.inv(), Ab - w.frob(2),
                                  w.frob(1) * (-a2b.frob(1) + Ab.frob(1) * w.frob(2) - w.frob(2) * w.frob(3)),
                                  w.frob(2)});
  const auto basis = additive_roots(bag, P);
  std::vector<FieldElem> admissible;
  for (const auto& b : span_elements(basis))
    if (!b.in_subfield(2)) admissible.push_back(b);
  std::sort(admissible.begin(), admissible.end());
  bag.set("b_1+p^2", pick(admissible, params, "b_1+p^2"));
  const FieldElem b = bag("b_1+p^2"), W = bag("w"), A2 = bag("a_1+p"), a = bag("a_2");
  const FieldElem bp = b.frob(2) - b;
  const FieldElem b1p = W.frob(2) * bp.frob(1) + b.frob(1) * A2;
  const Poly f1 = mono(bag.one(), 1 + pe(p, 2)) + mono(A2, 1 + p) + mono(a / k(a, 2), 2);
  // The b_2 row is illegible as printed. It is read the way the s = 3 row
  // reads: 2 b_2 = w^p (b^{p^2} - b)(a_{1+p} - w^{p^2}) + b a_2.
  const FieldElem b2 = (W.frob(1) * bp * (A2 - W.frob(2)) + b * a) / k(a, 2);
  const Poly f2 = mono(b.frob(2), 1 + pe(p, 2)) + mono(b1p, 1 + p) + mono(b2, 2) + mono(bag("b_1"), 1);
  const AdditivePoly T = ore_right_gcd(palindromic(f1), palindromic(f2));
  if (T.deg() != 3) fail("EmptyParameterSet", "Ad_f1 and Ad_f2 share a factor of degree " + std::to_string(T.deg()));
  const std::vector<FieldElem> V = additive_roots(bag, T);
  return finish(bag, {embed(f1, *bag.ctx), embed(f2, *bag.ctx)}, V);
}

// The printed parametrization of (a)-2-ii for s = 3.
CoverSpec build_a2ii_s3(const CaseParams& params) {
  Bag bag = start(params);
  const uint32_t p = bag.ctx->p();
  const FieldElem A2 = value_or_zero(bag, "a_1+p^2");
  const FieldElem A1 = value_or_zero(bag, "a_1+p");
  const FieldElem a2 = value_or_zero(bag, "a_2");
  value_or_zero(bag, "b_1");
  {
    const uint64_t e1 = 1, e2 = e1 + p, e3 = e2 + pe(p, 2), e4 = e3 + pe(p, 3), e5 = e4 + pe(p, 4), e6 = e5 + pe(p, 5);
    std::vector<FieldElem> c(e6 + 1, bag.zero());
    c[e6] = bag.one();
    c[e5] -= A2.frob(2);
    c[e4] += A1.frob(2);
    c[e3] -= a2.frob(2);
    c[e2] += A1.frob(1);
    c[e1] -= A2;
    c[0] += bag.one();
    const auto ws = roots_somewhere(bag, c, "w");
    bag.set("w", pick(ws, params, "w"));
  }
  auto P1 = [&]() {
    const FieldElem w = bag("w"), a = bag("a_1+p^2");
    const FieldElem w31 = w.frob(3) * w;
    return AdditivePoly(*bag.ctx, {-bag.one(), bag.zero(), w * a - w31, bag.one() - w * a, bag.zero(), w31});
  };
  auto P2 = [&]() {
    const FieldElem w = bag("w"), B2 = bag("a_1+p^2"), B1 = bag("a_1+p"), a = bag("a_2");
    const FieldElem c4 = w.frob(2) * (B2 - w.frob(3));
    const FieldElem c3 = w.frob(1) * (-a.frob(1) + B1.frob(1) * w.frob(2) - B2.frob(1) * w.frob(2) * w.frob(3) +
                                      w.frob(2) * w.frob(3) * w.frob(4));
    const FieldElem c1 = B1 + w.frob(2) * w.frob(3) - B2 * w.frob(2);
    const FieldElem c0 = -B1 + a.frob(1) * w.frob(1) - B1.frob(1) * w.frob(1) * w.frob(2) +
                         B2.frob(1) * w.frob(1) * w.frob(2) * w.frob(3) -
                         w.frob(1) * w.frob(2) * w.frob(3) * w.frob(4);
    return AdditivePoly(*bag.ctx, {c0, c1, bag.zero(), c3, c4});
  };
  const AdditivePoly G = ore_right_gcd(P1(), P2());
  if (G.deg() < 1 || !G.is_separable()) fail("EmptyParameterSet", "Z(P_1) and Z(P_2) meet only in 0");
  const auto basis = additive_roots(bag, G);
  std::vector<FieldElem> admissible;
  for (const auto& b : span_elements(basis))
    if (!b.in_subfield(3)) admissible.push_back(b);
  std::sort(admissible.begin(), admissible.end());
  bag.set("b_1+p^3", pick(admissible, params, "b_1+p^3"));
  const FieldElem b = bag("b_1+p^3"), w = bag("w"), B2 = bag("a_1+p^2"), B1 = bag("a_1+p"), a = bag("a_2");
  const FieldElem d = b.frob(3) - b;
  const FieldElem b1p2 = w.frob(3) * d.frob(2) + b.frob(2) * B2;
  const FieldElem b1p = w.frob(2) * d.frob(1) * (B2 - w.frob(3)) + b.frob(1) * B1;
  const FieldElem b2 = (w.frob(1) * d * (B1 - B2 * w.frob(2) + w.frob(2) * w.frob(3)) + b * a) / k(b, 2);
  const Poly f1 = mono(bag.one(), 1 + pe(p, 3)) + mono(B2, 1 + pe(p, 2)) + mono(B1, 1 + p) + mono(a / k(a, 2), 2);
  const Poly f2 = mono(b.frob(3), 1 + pe(p, 3)) + mono(b1p2, 1 + pe(p, 2)) + mono(b1p, 1 + p) + mono(b2, 2) +
                  mono(bag("b_1"), 1);
  const AdditivePoly T = ore_right_gcd(palindromic(f1), palindromic(f2));
  const auto V = additive_roots(bag, T);
  return finish(bag, {embed(f1, *bag.ctx), embed(f2, *bag.ctx)}, V);
}

// (b): f_1 = X^{1+p^s}, f_2 = alpha X^{1+p^{s+1}} + beta X^{1+p^s} + delta X^{1+p^{s-1}}.
CoverSpec build_p2t_b(const CaseParams& params) {
  Bag bag = start(params);
  const uint32_t p = bag.ctx->p();
  const int s = resolve_s(CaseId::kP2T_b, params, 0);
  const FieldElem& alpha = required(bag, "alpha2");
  const FieldElem beta = value_or_zero(bag, "beta2");
  if (alpha.is_zero() || !alpha.in_subfield(2 * s))
    violated("alpha2", "must be a nonzero element of F_{p^" + std::to_string(2 * s) + "}");
  if (!beta.in_subfield(s)) violated("beta2", "must lie in F_{p^" + std::to_string(s) + "}");
  // Palindromy forces delta = alpha^{p^{s-1}}; a supplied delta must agree.
  const FieldElem delta = alpha.frob(s - 1);
  if (bag.v.count("delta2") && bag("delta2") != delta) violated("delta2", "must equal alpha2^{p^{s-1}}");
  const Poly f1 = mono(bag.one(), 1 + pe(p, s));
  const Poly f2 = mono(alpha, 1 + pe(p, s + 1)) + mono(beta, 1 + pe(p, s)) + mono(delta, 1 + pe(p, s - 1)) +
                  mono(value_or_zero(bag, "b_1"), 1);
  const auto basis = additive_roots(bag, palindromic(f1));
  return finish(bag, {embed(f1, *bag.ctx), embed(f2, *bag.ctx)}, basis);
}

// ---------------------------------------------------------------- P2N

struct S1Data {
  Poly f1, f2;
};

S1Data s1_functions(const FieldElem& b, const FieldElem& b1) {
  const uint32_t p = b.ctx().p();
  const FieldElem one = FieldElem::one(b.ctx());
  return {mono(one, 1 + p) + mono(s1_a2(b), 2),
          mono(b, 1 + 2 * p) - mono(b.frob(1), 2 + p) + mono(s1_b3(b), 3) + mono(b1, 1)};
}

CoverSpec build_p2n_s1(const CaseParams& params) {
  Bag bag = start(params);
  const FieldElem& b = required(bag, "b");
  if (b.is_zero()) violated("b_{1+2p}", "must be nonzero");
  const auto fs = s1_functions(b, value_or_zero(bag, "b_1"));
  const auto V = additive_roots(bag, s1_kernel(s1_a2(b)));
  return finish(bag, {embed(fs.f1, *bag.ctx), embed(fs.f2, *bag.ctx)}, V);
}

CoverSpec build_p2n_s1_p3(const CaseParams& params) {
  Bag bag = start(params);
  value_or_zero(bag, "b_1");
  // b_7^16 = 1
  std::vector<FieldElem> c(17, bag.zero());
  c[0] = -bag.one();
  c[16] = bag.one();
  std::vector<FieldElem> roots = roots_somewhere(bag, c, "b_7");
  if (roots.size() < 16) {
    // Every 16th root of unity is admissible; move to a field holding all.
    const FieldCtx& big = FieldCtx::get(3, std::lcm(bag.ctx->m(), 4));
    bag.move_to(big);
    for (auto& x : c) x = embed(x, big);
    roots = field_roots(c);
  }
  const FieldElem b7 = pick(roots, params, "b_7");
  const FieldElem one = bag.one();
  // 2 a_2^3 = -b_7^6 - b_7^{-2}
  const FieldElem a2 = ((-b7.pow(6) - b7.pow(2).inv()) / k(b7, 2)).pth_root();
  const Poly f1 = mono(one, 4) + mono(a2, 2);
  const Poly f2 = mono(b7, 7) - mono(b7.pow(3), 5) + mono(bag("b_1"), 1);
  const auto V = additive_roots(bag, s1_kernel(a2));
  return finish(bag, {embed(f1, *bag.ctx), embed(f2, *bag.ctx)}, V);
}

// Coefficients of the s = 2 table in terms of B = b_{1+2p^2} and D = b_{2+p^2}.
struct S2Rows {
  FieldElem b_1pp2;    // b_{1+p+p^2}
  FieldElem a_1p;      // a_{1+p}
  FieldElem a_2;
  FieldElem b_12p;     // b_{1+2p}
  FieldElem b_2p;      // b_{2+p}
  FieldElem b_3;       // zero for p = 3
  AdditivePoly b_1p2_kernel;  // b_{1+p^2} runs over its roots
  AdditivePoly V_kernel;
};

S2Rows s2_rows(const FieldElem& B, const FieldElem& D) {
  const uint32_t p = B.ctx().p();
  const FieldElem two = k(B, 2), three = k(B, 3);
  auto Bf = [&](int e) { return B.frob(e); };
  auto Df = [&](int e) { return D.frob(e); };
  const FieldElem Bi = B.inv(), Di = D.inv();
  S2Rows r;
  r.b_1pp2 = (-two * Bf(1) * (Df(1) / Bf(2) + Df(1) * Di)).pth_root();
  // Recurring monomials
  const FieldElem B_p_p2 = Bf(1) / Bf(2);      // B^{p-p^2}
  const FieldElem B_p_Di = Bf(1) * Di;         // B^p D^{-1}
  const FieldElem D_p2_B_p3 = Df(2) / Bf(3);   // D^{p^2} B^{-p^3}
  const FieldElem D_p2_p = Df(2) / Df(1);      // D^{p^2-p}
  r.a_1p = (-B_p_p2 - B_p_Di - D_p2_B_p3 - D_p2_p).frob(-2);
  r.a_2 = ((Df(2) / Bf(2) + B * Di + Df(1) * Bf(1) / (Bf(2) * Bf(2)) + two * Df(1) * Di * Bf(1) / Bf(2) +
            Bf(1) * Df(1) * Di * Di) /
           two)
              .frob(-2);
  r.b_12p = (-Bf(1) * Bf(1) / Bf(2) - Bf(1) * Bf(1) * Di + Df(2) * Df(2) * Bf(2) / (Bf(3) * Bf(3)) +
             two * Df(2) * Df(2) / Df(1) * Bf(2) / Bf(3) + Bf(2) * Df(2) * Df(2) / (Df(1) * Df(1)))
                .frob(-2);
  r.b_2p = (Df(1) * Bf(1) * Bf(1) / (Bf(2) * Bf(2)) + two * Df(1) * Di * Bf(1) * Bf(1) / Bf(2) +
            Bf(1) * Bf(1) * Df(1) * Di * Di - Df(2) * Df(2) / Bf(3) - Df(2) * Df(2) / Df(1))
               .frob(-2);
  if (p != 3) {
    const FieldElem rhs = Df(2) * Df(2) / Bf(2) - Df(1) * Df(1) * Bf(1) * Bf(1) / (Bf(2) * Bf(2) * Bf(2)) -
                          three * Df(1) * Df(1) * Di * Di * Bf(1) * Bf(1) / Bf(2) -
                          three * Df(1) * Df(1) * Di * Bf(1) * Bf(1) / (Bf(2) * Bf(2)) -
                          Bf(1) * Bf(1) * Df(1) * Df(1) * Di * Di * Di + B * B * Di;
    r.b_3 = (rhs / three).frob(-2);
  } else {
    r.b_3 = FieldElem::zero(B.ctx());
  }
  r.b_1p2_kernel = AdditivePoly(B.ctx(), {-B_p_Di, B_p_p2 + B_p_Di + D_p2_p, -(D_p2_B_p3 + B_p_p2 + D_p2_p), D_p2_B_p3});
  r.V_kernel = AdditivePoly(B.ctx(), {-two * D, two * Df(1) - r.b_1pp2, r.b_1pp2.frob(1) - two * B, two * Bf(1)});
  (void)Bi;
  return r;
}

// b_{1+p} and b_2 from b_{1+p^2}. The printed b_2 row carries the exponent
// p - p^2 - p on B in its second term; the special case b_{1+p^2} in F_p,
// where b_2 = b_{1+p^2} a_2, forces p - p^2, which is what is used here.
std::pair<FieldElem, FieldElem> s2_lower(const FieldElem& B, const FieldElem& D, const FieldElem& c) {
  const FieldElem two = k(B, 2);
  auto Bf = [&](int e) { return B.frob(e); };
  auto Df = [&](int e) { return D.frob(e); };
  const FieldElem Di = D.inv();
  const FieldElem b1p = (-(Bf(1) / Bf(2) + Df(2) / Bf(3) + Df(2) / Df(1)) * c.frob(2) - Bf(1) * Di * c).frob(-2);
  const FieldElem b2 = (((Df(1) * Bf(1) / (Bf(2) * Bf(2)) + Df(1) * Di * Bf(1) / Bf(2) + Df(2) / Bf(2)) * c.frob(2) +
                         (Bf(1) * Df(1) * Di * Di + Df(1) * Di * Bf(1) / Bf(2) + B * Di) * c) /
                        two)
                           .frob(-2);
  return {b1p, b2};
}

CoverSpec build_p2n_s2(const CaseParams& params, bool p3) {
  Bag bag = start(params);
  const uint32_t p = bag.ctx->p();
  const FieldElem& B0 = required(bag, "b_1+2p^2");
  if (B0.is_zero()) violated("b_{1+2p^2}", "must be nonzero");
  value_or_zero(bag, "b_1");
  if (p3) {
    // b_11^18 b_19^-9 - b_11^6 b_19^-21 - b_19^6 b_11^3 + b_19^2 b_11^-1 = 0, times b_11:
    // b_19^-9 D^19 - b_19^-21 D^7 - b_19^6 D^4 + b_19^2 = 0
    std::vector<FieldElem> c(20, bag.zero());
    c[19] = B0.pow(9).inv();
    c[7] = -B0.pow(21).inv();
    c[4] = -B0.pow(6);
    c[0] = B0 * B0;
    auto roots = roots_somewhere(bag, c, "b_11");
    roots.erase(std::remove_if(roots.begin(), roots.end(), [](const FieldElem& x) { return x.is_zero(); }), roots.end());
    bag.set("b_2+p^2", pick(roots, params, "b_2+p^2"));
  } else {
    const FieldElem& D0 = required(bag, "b_2+p^2");
    if (D0.is_zero()) violated("b_{2+p^2}", "must be nonzero");
  }
  {
    const S2Rows r = s2_rows(bag("b_1+2p^2"), bag("b_2+p^2"));
    const auto basis = additive_roots(bag, r.b_1p2_kernel);
    auto all = span_elements(basis);
    std::sort(all.begin(), all.end());
    bag.set("b_1+p^2", pick(all, params, "b_1+p^2"));
  }
  const S2Rows r0 = s2_rows(bag("b_1+2p^2"), bag("b_2+p^2"));
  const auto V = additive_roots(bag, r0.V_kernel);
  const FieldElem B = bag("b_1+2p^2"), D = bag("b_2+p^2"), c = bag("b_1+p^2");
  const S2Rows r = s2_rows(B, D);
  const auto [b1p, b2] = s2_lower(B, D, c);
  const FieldElem one = bag.one();
  const Poly f1 = mono(one, 1 + p * p) + mono(r.a_1p, 1 + p) + mono(r.a_2, 2);
  const Poly f2 = mono(B, 1 + 2 * p * p) + mono(r.b_1pp2, 1 + p + p * p) + mono(D, 2 + p * p) + mono(c, 1 + p * p) +
                  mono(r.b_12p, 1 + 2 * p) + mono(r.b_2p, 2 + p) + mono(b1p, 1 + p) + mono(r.b_3, 3) + mono(b2, 2) +
                  mono(bag("b_1"), 1);
  return finish(bag, {f1, f2}, V);
}

// ---------------------------------------------------------------- P3N

CoverSpec build_p3n_l12(const CaseParams& params) {
  Bag bag = start(params);
  const FieldElem& b0 = required(bag, "b");
  if (b0.is_zero()) violated("b_{1+2p}", "must be nonzero");
  value_or_zero(bag, "b_1");
  value_or_zero(bag, "c_1");
  const auto V = additive_roots(bag, s1_kernel(s1_a2(bag("b"))));
  const FieldElem b = bag("b");
  std::vector<FieldElem> admissible;
  for (const auto& c : span_elements(V))
    if (fp_rank_of({b, c}) == 2) admissible.push_back(c);
  std::sort(admissible.begin(), admissible.end());
  const FieldElem c = pick(admissible, params, "c_1+2p");
  const uint32_t p = bag.ctx->p();
  const auto fs = s1_functions(b, bag("b_1"));
  // c lies in V, so f_3 is f_2 with b replaced by c and c_3 follows the b_3
  // row: 3 c_3^p = c^{-p}(c^{2p^2} - c^2).
  const FieldElem c3 = s1_b3(c);
  const Poly f3 = mono(c, 1 + 2 * p) - mono(c.frob(1), 2 + p) + mono(c3, 3) + mono(bag("c_1"), 1);
  return finish(bag, {fs.f1, fs.f2, f3}, V);
}

CoverSpec build_p3n_l23(const CaseParams& params, bool b1_nonzero) {
  Bag bag = start(params);
  const uint32_t p = bag.ctx->p();
  const FieldElem& c0 = required(bag, "c_1+2p^2");
  if (c0.is_zero()) violated("c_{1+2p^2}", "must be nonzero");
  const FieldElem& g0 = required(bag, "gamma2");
  if (g0.in_prime_field() || !g0.in_subfield(2)) violated("gamma2", "must lie in F_{p^2} - F_p");
  value_or_zero(bag, "c_1");
  const uint64_t q = pe(p, 2);
  auto a2_of = [&](const FieldElem& c) {
    // 2 a_2^{p^2} = -c^{-p^2} (c^{p^4} + c)
    return (-(c.frob(4) + c) / (c.frob(2) * k(c, 2))).frob(-2);
  };
  const FieldElem a20 = a2_of(c0);
  const AdditivePoly AdB(*bag.ctx, {bag.one(), bag.zero(), a20.frob(2) * k(a20, 2), bag.zero(), bag.one()});
  const auto V = additive_roots(bag, AdB);
  const FieldElem c = bag("c_1+2p^2"), gamma = bag("gamma2");
  const FieldElem a2 = a2_of(c);
  const FieldElem one = bag.one(), zero = bag.zero();
  // The s = 1 row with p replaced by p^2: 3 c_3^{p^2} = c^{-p^2}(c^{2p^4} - c^2).
  const FieldElem c3 = ((c.frob(4) * c.frob(4) - c * c) / (c.frob(2) * k(c, 3))).frob(-2);
  const Poly f1 = mono(one, 1 + q) + mono(a2, 2);
  Poly f3 = mono(c, 1 + 2 * q) - mono(c.frob(2), 2 + q) + mono(c3, 3) + mono(bag("c_1"), 1);
  FieldElem b1 = zero;
  if (b1_nonzero) {
    // With b_1 != 0 the terms c_{1+p^2} X^{1+p^2} + c_{1+p} X^{1+p} + c_2 X^2 must absorb
    // ell_23(y) b_1 X. That is F_p-linear in (b_1, c_{1+p^2}, c_{1+p}, c_2), so solve it
    // directly. The tabulated relations for these are not homogeneous and do not hold.
    const int m = bag.ctx->m();
    const FieldElem dg = gamma - gamma.frob(1);
    std::vector<FieldElem> ell23;
    for (const auto& y : V) {
      const FieldElem t = k(c, 2) * (c * y.frob(2) - c.frob(2) * y);
      const FieldElem l = (t - t.frob(1)) / dg;
      if (!l.in_prime_field()) fail("InvalidSpec", "ell_23 leaves F_p");
      ell23.push_back(l);
    }
    FpMatrix mat(p, V.size() * m, 4 * static_cast<size_t>(m));
    for (int slot = 0; slot < 4; ++slot) {
      for (int j = 0; j < m; ++j) {
        std::vector<uint32_t> unit(m, 0);
        unit[j] = 1;
        const FieldElem e = FieldElem::from_coords(*bag.ctx, unit);
        for (size_t i = 0; i < V.size(); ++i) {
          const FieldElem& y = V[i];
          FieldElem r = zero;
          if (slot == 0) r = -(ell23[i] * e);
          if (slot == 1) r = e.frob(-2) * y.frob(-2) + e * y.frob(2);
          if (slot == 2) r = e.frob(-1) * y.frob(-1) + e * y.frob(1);
          if (slot == 3) r = k(c, 2) * e * y;
          const auto rc = r.coords();
          for (int t = 0; t < m; ++t) mat.at(i * m + t, slot * m + j) = rc[t];
        }
      }
    }
    const auto ker = fp_kernel(mat);
    auto part = [&](const FpVector& x, int slot) {
      return FieldElem::from_coords(*bag.ctx, std::vector<uint32_t>(x.begin() + slot * m, x.begin() + (slot + 1) * m));
    };
    // Kernel vectors with b_1 != 0, plus sums of consecutive ones for variety.
    std::vector<FpVector> sols;
    for (size_t i = 0; i < ker.size(); ++i) {
      if (!part(ker[i], 0).is_zero()) sols.push_back(ker[i]);
      if (i + 1 < ker.size()) {
        FpVector x(ker[i].size());
        for (size_t t = 0; t < x.size(); ++t) x[t] = (ker[i][t] + ker[i + 1][t]) % p;
        if (!part(x, 0).is_zero()) sols.push_back(x);
      }
    }
    const FpVector& x = pick(sols, params, "b_1");
    b1 = part(x, 0);
    bag.set("b_1", b1);
    bag.set("c_1+p^2", part(x, 1));
    bag.set("c_1+p", part(x, 2));
    bag.set("c_2", part(x, 3));
    f3 += mono(part(x, 1), 1 + q) + mono(part(x, 2), 1 + p) + mono(part(x, 3), 2);
  }
  const Poly f2 = f1 * gamma + mono(b1, 1);
  return finish(bag, {embed(f1, *bag.ctx), embed(f2, *bag.ctx), embed(f3, *bag.ctx)}, V);
}

CoverSpec build_p3n_both(const CaseParams& params) {
  Bag bag = start(params);
  const uint32_t p = bag.ctx->p();
  const FieldElem& b0 = required(bag, "b");
  if (b0.is_zero()) violated("b_{1+2p}", "must be nonzero");
  value_or_zero(bag, "c_1+p");
  value_or_zero(bag, "c_1");
  const auto V = additive_roots(bag, s1_kernel(s1_a2(bag("b"))));
  auto all = span_elements(V);
  std::sort(all.begin(), all.end());
  const FieldElem cc = pick(all, params, "c_1+2p");
  const FieldElem b = bag("b"), c1p = bag("c_1+p");
  const FieldElem two = k(b, 2), three = k(b, 3), six = k(b, 6);
  const FieldElem bmp = b.frob(1).inv();  // b^{-p}
  const FieldElem b1 = (bmp * (c1p.frob(1) - c1p) / two).pth_root();
  const FieldElem c4 = (-bmp * (b * b * b + b.frob(2) * b.frob(2) * b.frob(2)) / six).pth_root();
  const FieldElem c3 = (bmp * (b + b.frob(2)) * (cc.frob(2) - cc) / three).pth_root();
  const FieldElem c2 = (-bmp * (c1p.frob(1) * b.frob(2) + c1p * b) / two).pth_root();
  const auto fs = s1_functions(b, b1);
  const Poly f3 = mono(two * b * b / three, 1 + 3 * p) - mono(b * b.frob(1), 2 + 2 * p) + mono(cc, 1 + 2 * p) +
                  mono(two * b.frob(1) * b.frob(1) / three, 3 + p) - mono(cc.frob(1), 2 + p) + mono(c1p, 1 + p) +
                  mono(c4, 4) + mono(c3, 3) + mono(c2, 2) + mono(bag("c_1"), 1);
  return finish(bag, {fs.f1, fs.f2, f3}, V);
}

}  // namespace

CoverSpec build_case(CaseId id, const CaseParams& params) {
  if (!params.ctx) fail("InvalidArgument", "case parameters need a field");
  check_prime(id, params.ctx->p());
  switch (id) {
    case CaseId::kP1_v2s:
      return build_p1(id, params, 0);
    case CaseId::kP1_v2s_1:
      return build_p1(id, params, 1);
    case CaseId::kP1_v2s_2:
      return build_p1(id, params, 2);
    case CaseId::kP1_v2s_3:
      return build_p1(id, params, 3);
    case CaseId::kP1_v2s_4:
      return build_p1(id, params, 4);
    case CaseId::kP2T_a1:
      return build_gamma_family(id, params, 2, 0);
    case CaseId::kP2T_a2i:
      return build_gamma_family(id, params, 2, 1);
    case CaseId::kP2T_a3i:
      return build_gamma_family(id, params, 2, 2);
    case CaseId::kP2T_a2ii: {
      if (params.values.count("lambda1")) return build_linear_factor_family(id, params, 0);
      const int s = params.s ? params.s : 2;
      if (s == 2) return build_a2ii_s2(params);
      if (s == 3) return build_a2ii_s3(params);
      violated("s", "the printed (a)-2-ii tables cover s = 2 and s = 3; pass lambda1, lambda2 for other s");
    }
    case CaseId::kP2T_a3ii:
      return build_linear_factor_family(id, params, 1);
    case CaseId::kP2T_a3iii:
      return build_quadratic_factor_family(id, params);
    case CaseId::kP2T_b:
      return build_p2t_b(params);
    case CaseId::kP2N_s1:
      return build_p2n_s1(params);
    case CaseId::kP2N_s1_p3:
      return build_p2n_s1_p3(params);
    case CaseId::kP2N_s2:
      return build_p2n_s2(params, false);
    case CaseId::kP2N_s2_p3:
      return build_p2n_s2(params, true);
    case CaseId::kP3T:
      return build_gamma_family(id, params, 3, 0);
    case CaseId::kP3N_l12:
      return build_p3n_l12(params);
    case CaseId::kP3N_l23_b1nz:
      return build_p3n_l23(params, true);
    case CaseId::kP3N_l23_b1z:
      return build_p3n_l23(params, false);
    case CaseId::kP3N_both:
      return build_p3n_both(params);
  }
  fail("InvalidArgument", "unknown case");
}

}  // namespace bigaction
