// Copyright 2026 The bigaction Authors
// SPDX-License-Identifier: Apache-2.0

#include "bigaction/polyring.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

#include <boost/multiprecision/cpp_int.hpp>

#include "bigaction/error.hpp"

namespace bigaction {

Poly::Poly(const FieldCtx& ctx, std::vector<FieldElem> coeffs) : ctx_(&ctx), c_(std::move(coeffs)) {
  for (const auto& c : c_)
    if (c.ctx_ptr() != ctx_) fail("ContextMismatch", "coefficient outside " + ctx.name());
  normalize();
}

Poly Poly::monomial(const FieldElem& c, size_t e) {
  Poly r(c.ctx());
  if (c.is_zero()) return r;
  r.c_.assign(e + 1, FieldElem::zero(c.ctx()));
  r.c_[e] = c;
  return r;
}

void Poly::normalize() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

void Poly::check_same(const Poly& o) const {
  if (ctx_ != o.ctx_) fail("ContextMismatch", "polynomials over different fields");
}

FieldElem Poly::coeff(size_t e) const { return e < c_.size() ? c_[e] : FieldElem::zero(*ctx_); }

FieldElem Poly::leading() const { return c_.empty() ? FieldElem::zero(*ctx_) : c_.back(); }

void Poly::set_coeff(size_t e, const FieldElem& v) {
  if (v.ctx_ptr() != ctx_) fail("ContextMismatch", "coefficient outside " + ctx_->name());
  if (e >= c_.size()) {
    if (v.is_zero()) return;
    c_.resize(e + 1, FieldElem::zero(*ctx_));
  }
  c_[e] = v;
  normalize();
}

void Poly::add_to_coeff(size_t e, const FieldElem& v) { set_coeff(e, coeff(e) + v); }

Poly Poly::operator+(const Poly& o) const {
  check_same(o);
  Poly r = c_.size() >= o.c_.size() ? *this : o;
  const Poly& s = c_.size() >= o.c_.size() ? o : *this;
  for (size_t i = 0; i < s.c_.size(); ++i) r.c_[i] += s.c_[i];
  r.normalize();
  return r;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
  check_same(o);
  Poly r(*ctx_);
  if (c_.empty() || o.c_.empty()) return r;
  r.c_.assign(c_.size() + o.c_.size() - 1, FieldElem::zero(*ctx_));
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    for (size_t j = 0; j < o.c_.size(); ++j)
      if (!o.c_[j].is_zero()) r.c_[i + j] += c_[i] * o.c_[j];
  }
  r.normalize();
  return r;
}

Poly Poly::operator*(const FieldElem& k) const {
  Poly r = *this;
  for (auto& c : r.c_) c *= k;
  r.normalize();
  return r;
}

Poly Poly::scale(uint32_t k) const {
  Poly r = *this;
  for (auto& c : r.c_) c = c.scale(k);
  r.normalize();
  return r;
}

bool Poly::operator==(const Poly& o) const {
  check_same(o);
  if (c_.size() != o.c_.size()) return false;
  for (size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != o.c_[i]) return false;
  return true;
}

FieldElem Poly::eval(const FieldElem& x) const {
  FieldElem v = FieldElem::zero(*ctx_);
  for (size_t i = c_.size(); i-- > 0;) v = v * x + c_[i];
  return v;
}

Poly Poly::frobenius() const {
  Poly r(*ctx_);
  if (c_.empty()) return r;
  const size_t p = ctx_->p();
  r.c_.assign((c_.size() - 1) * p + 1, FieldElem::zero(*ctx_));
  for (size_t i = 0; i < c_.size(); ++i) r.c_[i * p] = c_[i].frob(1);
  return r;
}

Poly Poly::pow(unsigned e) const {
  Poly r = constant(FieldElem::one(*ctx_)), b = *this;
  while (e) {
    if (e & 1) r = r * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return r;
}

Poly Poly::without_constant() const {
  Poly r = *this;
  if (!r.c_.empty()) r.c_[0] = FieldElem::zero(*ctx_);
  r.normalize();
  return r;
}

std::string Poly::str() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t i = c_.size(); i-- > 0;) {
    if (c_[i].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << c_[i].str();
    if (i) os << "*X^" << i;
  }
  return os.str();
}

Poly embed(const Poly& f, const FieldCtx& big) {
  std::vector<FieldElem> c;
  c.reserve(f.coeffs().size());
  for (const auto& a : f.coeffs()) c.push_back(embed(a, big));
  return Poly(big, std::move(c));
}

// ---------------------------------------------------------------------------

Poly wp(const Poly& f) { return f.frobenius() - f; }

namespace {

// Field constants modulo wp(field) are classified by their trace; tau is the
// first element in index order with trace 1, used as the class representative.
// Elements of index below p^j all have trace 0 when x^0..x^{j-1} do, so that
// element is t^{-1} x^j for the first j with t = Tr(x^j) != 0.
FieldElem trace_one(const FieldCtx& ctx) {
  for (int j = 0; j < ctx.m(); ++j) {
    std::vector<uint32_t> e(ctx.m(), 0);
    e[j] = 1;
    const FieldElem x = FieldElem::from_coords(ctx, e);
    if (const uint32_t t = x.trace()) return x.scale(ctx.inv_fp(t));
  }
  fail("InternalError", "trace form vanishes on " + ctx.name());
}

}  // namespace

Poly reduce_mod_wp(const Poly& f) {
  if (f.is_zero()) return f;
  const FieldCtx& ctx = f.ctx();
  const size_t p = ctx.p();
  std::vector<FieldElem> c = f.coeffs();
  // c X^{pe} = c^{1/p} X^e + wp(c^{1/p} X^e); walk downward so chains
  // X^{p^2 e} -> X^{pe} -> X^e collapse in one pass.
  for (size_t e = c.size() - 1; e >= 1; --e) {
    if (e % p != 0 || c[e].is_zero()) continue;
    c[e / p] += c[e].pth_root();
    c[e] = FieldElem::zero(ctx);
  }
  const uint32_t t = c[0].trace();
  c[0] = t == 0 ? FieldElem::zero(ctx) : trace_one(ctx).scale(t);
  return Poly(ctx, std::move(c));
}

bool equal_mod_wp(const Poly& a, const Poly& b) {
  return reduce_mod_wp(a - b).without_constant().is_zero();
}

std::optional<FieldElem> solve_wp_constant(const FieldElem& c) {
  const FieldCtx& ctx = c.ctx();
  if (c.trace() != 0) return std::nullopt;
  FpMatrix a = frob_matrix(ctx, 1);
  for (int i = 0; i < ctx.m(); ++i) a.at(i, i) = (a.at(i, i) + ctx.p() - 1) % ctx.p();
  FpVector x;
  if (!fp_solve(a, to_vector(c), x)) return std::nullopt;
  FieldElem k = from_vector(ctx, x);
  // Normalize inside the coset k + F_p.
  return k - FieldElem::from_int(ctx, k.coord(0));
}

WpSplit wp_preimage_mod_const(const Poly& h) {
  const FieldCtx& ctx = h.ctx();
  WpSplit out{Poly(ctx), FieldElem::zero(ctx)};
  if (h.is_zero()) return out;
  const size_t p = ctx.p();
  std::vector<FieldElem> r = h.coeffs();
  std::vector<FieldElem> g(r.size(), FieldElem::zero(ctx));
  for (size_t e = r.size() - 1; e >= 1; --e) {
    if (r[e].is_zero()) continue;
    if (e % p != 0)
      fail("NotInImage", "exponent " + std::to_string(e) + " survives reduction");
    // wp(a X^d) = c X^e - a X^d with a = c^{1/p}.
    const FieldElem a = r[e].pth_root();
    g[e / p] += a;
    r[e / p] += a;
    r[e] = FieldElem::zero(ctx);
  }
  out.g = Poly(ctx, std::move(g));
  out.rest = r[0];
  return out;
}

Poly wp_preimage(const Poly& h) {
  if (h.is_zero()) return h;
  WpSplit s = wp_preimage_mod_const(h);
  const auto k = solve_wp_constant(s.rest);
  if (!k) fail("NotInImage", "constant " + s.rest.str() + " has nonzero trace");
  s.g.set_coeff(0, *k);
  return s.g;
}

Poly translate(const Poly& f, const FieldElem& y) {
  const FieldCtx& ctx = f.ctx();
  Poly r(ctx);
  if (f.is_zero()) return r;
  // Horner in the ring: r <- r*(X+y) + c_e.
  std::vector<FieldElem> acc;
  const auto& c = f.coeffs();
  for (size_t e = c.size(); e-- > 0;) {
    acc.push_back(FieldElem::zero(ctx));
    for (size_t i = acc.size() - 1; i > 0; --i) acc[i] = acc[i - 1] + acc[i] * y;
    acc[0] = acc[0] * y + c[e];
  }
  return Poly(ctx, std::move(acc));
}

Poly delta(const Poly& f, const FieldElem& y) { return translate(f, y) - f; }

std::vector<int> min_ppower_terms(uint64_t up_to, uint32_t p) {
  std::vector<uint64_t> powers;
  for (uint64_t q = 1; q <= up_to; q *= p) {
    powers.push_back(q);
    if (q > up_to / p) break;
  }
  std::vector<int> best(up_to + 1, 0);
  for (uint64_t n = 1; n <= up_to; ++n) {
    int b = INT32_MAX;
    for (uint64_t q : powers) {
      if (q > n) break;
      b = std::min(b, best[n - q] + 1);
    }
    best[n] = b;
  }
  return best;
}

int sigma_level(const Poly& f) {
  if (f.degree() <= 0) return 0;
  const auto best = min_ppower_terms(static_cast<uint64_t>(f.degree()), f.ctx().p());
  int level = 0;
  for (size_t e = 1; e < f.coeffs().size(); ++e)
    if (!f.coeffs()[e].is_zero()) level = std::max(level, best[e]);
  return level;
}

bool sigma_membership(const Poly& f, int t) {
  if (t < 1) fail("InvalidArgument", "sigma level must be positive");
  return sigma_level(f) <= t;
}

// ---------------------------------------------------------------------------
// Witt vectors of length 2

std::vector<uint32_t> witt_carry_coefficients(uint32_t p) {
  static std::mutex mu;
  static std::map<uint32_t, std::vector<uint32_t>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(p);
  if (it != cache.end()) return it->second;
  using boost::multiprecision::cpp_int;
  // (x^p + y^p - (x+y)^p)/p = -sum_{0<i<p} (binom(p,i)/p) x^i y^{p-i}
  std::vector<uint32_t> out(p + 1, 0);
  cpp_int binom = 1;
  for (uint32_t i = 1; i < p; ++i) {
    binom = binom * (p - i + 1) / i;
    cpp_int q = binom / p;
    cpp_int v = (-q) % p;
    if (v < 0) v += p;
    out[i] = static_cast<uint32_t>(v);
  }
  cache[p] = out;
  return out;
}

Poly witt_carry(const Poly& x, const Poly& y) {
  const FieldCtx& ctx = x.ctx();
  const uint32_t p = ctx.p();
  const auto coef = witt_carry_coefficients(p);
  std::vector<Poly> xp(p + 1, Poly::constant(FieldElem::one(ctx))), yp = xp;
  for (uint32_t i = 1; i <= p; ++i) {
    xp[i] = xp[i - 1] * x;
    yp[i] = yp[i - 1] * y;
  }
  Poly r(ctx);
  for (uint32_t i = 1; i < p; ++i)
    if (coef[i]) r += (xp[i] * yp[p - i]).scale(coef[i]);
  return r;
}

Witt2Poly witt2_add(const Witt2Poly& a, const Witt2Poly& b) {
  return {a.w0 + b.w0, a.w1 + b.w1 + witt_carry(a.w0, b.w0)};
}

Witt2Poly witt2_sub(const Witt2Poly& a, const Witt2Poly& b) {
  // d + b = a forces d0 = a0 - b0 and d1 = a1 - b1 - C(d0, b0).
  const Poly d0 = a.w0 - b.w0;
  return {d0, a.w1 - b.w1 - witt_carry(d0, b.w0)};
}

Witt2Poly witt2_frobenius(const Witt2Poly& a) { return {a.w0.frobenius(), a.w1.frobenius()}; }

Witt2Poly witt2_wp(const Witt2Poly& w) { return witt2_sub(witt2_frobenius(w), w); }

}  // namespace bigaction
