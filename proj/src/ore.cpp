// Copyright 2026 The bigaction Authors
// SPDX-License-Identifier: Apache-2.0

#include "bigaction/ore.hpp"

#include <cstdlib>
#include <sstream>

#include "bigaction/error.hpp"

namespace bigaction {

AdditivePoly::AdditivePoly(const FieldCtx& ctx, std::vector<FieldElem> coeffs)
    : ctx_(&ctx), c_(std::move(coeffs)) {
  for (const auto& c : c_)
    if (c.ctx_ptr() != ctx_) fail("ContextMismatch", "coefficient outside " + ctx.name());
  normalize();
}

AdditivePoly AdditivePoly::term(const FieldElem& c, int k) {
  std::vector<FieldElem> v(k + 1, FieldElem::zero(c.ctx()));
  v[k] = c;
  return AdditivePoly(c.ctx(), std::move(v));
}

AdditivePoly AdditivePoly::from_poly(const Poly& f) {
  const FieldCtx& ctx = f.ctx();
  std::vector<FieldElem> c;
  const auto& fc = f.coeffs();
  uint64_t q = 1;
  for (size_t e = 0; e < fc.size(); ++e) {
    if (fc[e].is_zero()) continue;
    while (q < e) q *= ctx.p();
    if (q != e) fail("NotAdditive", "exponent " + std::to_string(e) + " is not a power of p");
  }
  q = 1;
  while (q < fc.size()) {
    c.push_back(fc[q]);
    q *= ctx.p();
  }
  return AdditivePoly(ctx, std::move(c));
}

void AdditivePoly::normalize() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

FieldElem AdditivePoly::coeff(int j) const {
  return j >= 0 && j < static_cast<int>(c_.size()) ? c_[j] : FieldElem::zero(*ctx_);
}

FieldElem AdditivePoly::leading() const { return c_.empty() ? FieldElem::zero(*ctx_) : c_.back(); }

AdditivePoly AdditivePoly::operator+(const AdditivePoly& o) const {
  if (ctx_ != o.ctx_) fail("ContextMismatch", "additive polynomials over different fields");
  std::vector<FieldElem> r(std::max(c_.size(), o.c_.size()), FieldElem::zero(*ctx_));
  for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
  return AdditivePoly(*ctx_, std::move(r));
}

AdditivePoly AdditivePoly::operator-(const AdditivePoly& o) const {
  std::vector<FieldElem> neg;
  for (const auto& c : o.c_) neg.push_back(-c);
  return *this + AdditivePoly(*o.ctx_, std::move(neg));
}

AdditivePoly AdditivePoly::operator*(const AdditivePoly& o) const {
  if (ctx_ != o.ctx_) fail("ContextMismatch", "additive polynomials over different fields");
  if (c_.empty() || o.c_.empty()) return AdditivePoly(*ctx_);
  std::vector<FieldElem> r(c_.size() + o.c_.size() - 1, FieldElem::zero(*ctx_));
  // (a F^i)(b F^j) = a b^{p^i} F^{i+j}
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    for (size_t j = 0; j < o.c_.size(); ++j)
      if (!o.c_[j].is_zero()) r[i + j] += c_[i] * o.c_[j].frob(static_cast<int>(i));
  }
  return AdditivePoly(*ctx_, std::move(r));
}

bool AdditivePoly::operator==(const AdditivePoly& o) const {
  if (ctx_ != o.ctx_) fail("ContextMismatch", "additive polynomials over different fields");
  if (c_.size() != o.c_.size()) return false;
  for (size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != o.c_[i]) return false;
  return true;
}

FieldElem AdditivePoly::evaluate(const FieldElem& x) const {
  FieldElem acc = FieldElem::zero(*ctx_), xp = x;
  for (size_t j = 0; j < c_.size(); ++j) {
    if (j) xp = xp.frob(1);
    if (!c_[j].is_zero()) acc += c_[j] * xp;
  }
  return acc;
}

Poly AdditivePoly::to_poly() const {
  Poly f(*ctx_);
  uint64_t q = 1;
  for (size_t j = 0; j < c_.size(); ++j, q *= ctx_->p()) f.set_coeff(q, c_[j]);
  return f;
}

AdditivePoly AdditivePoly::monic() const {
  if (c_.empty()) return *this;
  const FieldElem li = c_.back().inv();
  std::vector<FieldElem> r;
  for (const auto& c : c_) r.push_back(c * li);
  return AdditivePoly(*ctx_, std::move(r));
}

std::string AdditivePoly::str() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t j = c_.size(); j-- > 0;) {
    if (c_[j].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << c_[j].str() << "*F^" << j;
  }
  return os.str();
}

AdditivePoly ore_mul(const AdditivePoly& a, const AdditivePoly& b) { return a * b; }

OreDivMod ore_right_divmod(const AdditivePoly& a, const AdditivePoly& b) {
  if (b.is_zero()) fail("DivisionByZero", "right division by the zero additive polynomial");
  const FieldCtx& ctx = a.ctx();
  AdditivePoly q(ctx), r = a;
  const FieldElem lb = b.leading();
  while (!r.is_zero() && r.deg() >= b.deg()) {
    const int k = r.deg() - b.deg();
    const AdditivePoly t = AdditivePoly::term(r.leading() / lb.frob(k), k);
    q = q + t;
    r = r - t * b;
  }
  return {q, r};
}

AdditivePoly ore_right_gcd(const AdditivePoly& a, const AdditivePoly& b) {
  AdditivePoly x = a, y = b;
  while (!y.is_zero()) {
    AdditivePoly r = ore_right_divmod(x, y).r;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

AdditivePoly embed(const AdditivePoly& a, const FieldCtx& big) {
  std::vector<FieldElem> c;
  for (const auto& x : a.coeffs()) c.push_back(embed(x, big));
  return AdditivePoly(big, std::move(c));
}

std::optional<XSForm> xs_decompose(const Poly& f) {
  const FieldCtx& ctx = f.ctx();
  const uint64_t p = ctx.p();
  std::vector<FieldElem> s;
  FieldElem c = FieldElem::zero(ctx);
  const auto& fc = f.coeffs();
  uint64_t q = 1;  // p^j
  size_t j = 0;
  for (size_t e = 1; e < fc.size(); ++e) {
    if (fc[e].is_zero()) continue;
    if (e == 1) {
      c = fc[e];
      continue;
    }
    while (1 + q < e) {
      q *= p;
      ++j;
    }
    if (1 + q != e) return std::nullopt;
    if (s.size() <= j) s.resize(j + 1, FieldElem::zero(ctx));
    s[j] = fc[e];
  }
  return XSForm{AdditivePoly(ctx, std::move(s)), c};
}

AdditivePoly palindromic(const Poly& f) {
  const auto form = xs_decompose(f);
  if (!form || form->s.deg() < 1) fail("NotXSForm", "f is not X*S(X) + cX with deg_F S >= 1");
  const AdditivePoly& S = form->s;
  const FieldCtx& ctx = f.ctx();
  const int s = S.deg();
  std::vector<FieldElem> ad(2 * s + 1, FieldElem::zero(ctx));
  // F^s (a_j F^j + F^{-j} a_j) = a_j^{p^s} F^{s+j} + a_j^{p^{s-j}} F^{s-j}
  for (int j = 0; j <= s; ++j) {
    const FieldElem a = S.coeff(j);
    if (a.is_zero()) continue;
    ad[s + j] += a.frob(s);
    ad[s - j] += a.frob(s - j);
  }
  const FieldElem norm = S.leading().frob(s).inv();
  for (auto& x : ad) x *= norm;
  return AdditivePoly(ctx, std::move(ad));
}

int max_ext_degree() {
  if (const char* env = std::getenv("BIGACTION_MAX_EXT")) {
    const int v = std::atoi(env);
    if (v >= 1) return std::min(v, kMaxExt);
  }
  return kMaxExt;
}

std::vector<FieldElem> roots_in(const AdditivePoly& a, const FieldCtx& ctx) {
  const AdditivePoly b = embed(a, ctx);
  const int m = ctx.m();
  FpMatrix mat(ctx.p(), m, m);
  for (int j = 0; j < m; ++j) {
    std::vector<uint32_t> e(m, 0);
    e[j] = 1;
    const FieldElem img = b.evaluate(FieldElem::from_coords(ctx, e));
    for (int i = 0; i < m; ++i) mat.at(i, j) = img.coord(i);
  }
  std::vector<FieldElem> basis;
  for (const auto& v : fp_kernel(mat)) basis.push_back(from_vector(ctx, v));
  return basis;
}

RootSpace root_space(const AdditivePoly& a, int max_degree, bool allow_inseparable) {
  if (a.is_zero()) fail("InvalidArgument", "root space of the zero additive polynomial");
  int v = 0;
  while (a.coeff(v).is_zero()) ++v;
  if (v > 0 && !allow_inseparable)
    fail("InseparableInput", "constant coefficient is zero; F^" + std::to_string(v) + " divides on the right");
  const size_t target = static_cast<size_t>(a.deg() - v);
  const FieldCtx& base = a.ctx();
  const int cap = max_degree > 0 ? std::min(max_degree, kMaxExt) : max_ext_degree();
  for (int mm = base.m(); mm <= cap; mm += base.m()) {
    const FieldCtx& ctx = FieldCtx::get(base.p(), mm);
    auto basis = roots_in(a, ctx);
    if (basis.size() == target) return RootSpace{&ctx, std::move(basis), v > 0};
  }
  fail("SplittingFieldNotFound",
       "no GF(" + std::to_string(base.p()) + "^m') with m' <= " + std::to_string(cap) + " splits " + a.str());
}

std::vector<FieldElem> span_elements(const std::vector<FieldElem>& basis) {
  if (basis.empty()) return {};
  const FieldCtx& ctx = basis[0].ctx();
  std::vector<FieldElem> out{FieldElem::zero(ctx)};
  for (const auto& b : basis) {
    const size_t n = out.size();
    for (uint32_t lam = 1; lam < ctx.p(); ++lam) {
      const FieldElem lb = b.scale(lam);
      for (size_t i = 0; i < n; ++i) out.push_back(out[i] + lb);
    }
  }
  return out;
}

size_t fp_rank_of(const std::vector<FieldElem>& elems) {
  if (elems.empty()) return 0;
  const FieldCtx& ctx = elems[0].ctx();
  FpMatrix mat(ctx.p(), ctx.m(), elems.size());
  for (size_t j = 0; j < elems.size(); ++j)
    for (int i = 0; i < ctx.m(); ++i) mat.at(i, j) = elems[j].coord(i);
  return fp_rank(mat);
}

AdditivePoly subspace_polynomial(const std::vector<FieldElem>& basis) {
  if (basis.empty()) fail("InvalidArgument", "empty basis has no field context");
  AdditivePoly P = AdditivePoly::identity(basis[0].ctx());
  const uint32_t p = basis[0].ctx().p();
  for (const auto& b : basis) {
    const FieldElem c = P.evaluate(b);
    if (c.is_zero()) fail("InvalidArgument", "basis is not F_p-independent");
    // P <- P^p - c^{p-1} P vanishes on the enlarged span.
    P = (AdditivePoly::term(FieldElem::one(b.ctx()), 1) - AdditivePoly::scalar(c.pow(p - 1))) * P;
  }
  return P;
}

}  // namespace bigaction
