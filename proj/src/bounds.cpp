// Copyright 2026 The bigaction Authors
// SPDX-License-Identifier: Apache-2.0

#include "bigaction/bounds.hpp"

#include <cmath>

#include "bigaction/error.hpp"

namespace bigaction {

namespace {

int sgn(const Rational& r) { return r > 0 ? 1 : (r < 0 ? -1 : 0); }

Int ipow(uint32_t p, int e) {
  Int r = 1;
  for (int i = 0; i < e; ++i) r *= p;
  return r;
}

}  // namespace

Surd::Surd(Rational a, Rational b, Rational d) : a_(std::move(a)), b_(std::move(b)), d_(std::move(d)) {
  if (d_ < 0) fail("InvalidArgument", "negative radicand");
}

void Surd::check_same(const Surd& o) const {
  // A purely rational operand may carry any radicand.
  if (d_ != o.d_ && b_ != 0 && o.b_ != 0) fail("InvalidArgument", "surds with different radicands");
}

Surd Surd::operator+(const Surd& o) const {
  check_same(o);
  return Surd(a_ + o.a_, b_ + o.b_, b_ != 0 ? d_ : o.d_);
}

Surd Surd::operator-(const Surd& o) const { return *this + o * Rational(-1); }

Surd Surd::operator*(const Surd& o) const {
  check_same(o);
  const Rational d = b_ != 0 ? d_ : o.d_;
  return Surd(a_ * o.a_ + b_ * o.b_ * d, a_ * o.b_ + b_ * o.a_, d);
}

Surd Surd::operator*(const Rational& k) const { return Surd(a_ * k, b_ * k, d_); }

Surd Surd::inv() const {
  const Rational norm = a_ * a_ - b_ * b_ * d_;
  if (norm == 0) fail("DivisionByZero", "inverse of a zero-norm surd");
  return Surd(a_ / norm, -b_ / norm, d_);
}

Surd Surd::operator/(const Surd& o) const { return *this * o.inv(); }

int Surd::sign() const {
  const int sa = sgn(a_), sb = d_ == 0 ? 0 : sgn(b_);
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  const Rational lhs = a_ * a_, rhs = b_ * b_ * d_;
  if (lhs > rhs) return sa;
  if (lhs < rhs) return sb;
  return 0;
}

Int Surd::floor() const {
  const double approx = a_.convert_to<double>() + b_.convert_to<double>() * std::sqrt(d_.convert_to<double>());
  Int k(static_cast<long long>(std::floor(approx)));
  while (compare(Rational(k)) < 0) --k;
  while (compare(Rational(k + 1)) >= 0) ++k;
  return k;
}

std::string Surd::str() const {
  if (b_ == 0 || d_ == 0) return to_string(a_);
  return to_string(a_) + " + " + to_string(b_) + "*sqrt(" + to_string(d_) + ")";
}

void check_M(const Rational& M, uint32_t p) {
  const Rational top(4 * Int(p), Int(p - 1) * (p - 1));
  if (M <= 0 || M > top) fail("InvalidM", "M = " + to_string(M) + " outside (0, " + to_string(top) + "]");
}

Surd phi(const Rational& M) { return Surd(2 + M, 2, 1 + M); }

Surd gprime_bound(const Rational& M, uint32_t p) {
  check_M(M, p);
  return phi(M) * (Rational(4 * Int(p), Int(p - 1) * (p - 1)) / (M * M));
}

Int bound_Gprime(const Rational& M, uint32_t p) {
  const Surd B = gprime_bound(M, p);
  Int q = 1;
  while (B.compare(Rational(q * p)) >= 0) q *= p;
  return q;
}

Rational bound_genus(uint32_t p, const Int& order_V, const Int& order_G2) {
  return Rational(Int(p - 1) * order_G2 * order_V, 2 * Int(p));
}

Surd bound_genus_M(const Rational& M, uint32_t p, const Int& order_V) {
  check_M(M, p);
  return phi(M) * (Rational(2, p - 1) / (M * M) * Rational(order_V));
}

NontrivialBounds bounds_nontrivial(const Rational& M, uint32_t p) {
  check_M(M, p);
  const Int pm = p - 1;
  const Surd ph = phi(M);
  return {ph * (Rational(16 * Int(p), ipow(p - 1, 4)) / (M * M * M)),
          ph * ph * (Rational(32 * Int(p), pm * ipow(p - 1, 4)) / (M * M * M * M * M))};
}

TrivialBounds bounds_trivial(const Rational& M, uint32_t p) {
  check_M(M, p);
  const Surd inv_phi = phi(M).inv();
  const Rational M3 = M * M * M;
  return {inv_phi * (Rational(ipow(p - 1, 2), 4 * Int(p)) * M3), inv_phi * (Rational(ipow(p - 1, 4), 16 * Int(p)) * M3)};
}

std::vector<SylowRow> sylow_extension_criteria(uint32_t p, const Int& g, int n, int w_dim, const Rational& M) {
  const Int pn = ipow(p, n);
  const Rational big = big_action_threshold(p) * Rational(g, pn);
  const Rational gm = M * Rational(g * g, pn);
  std::vector<SylowRow> rows;
  Int pv = 1;
  for (int v = 0; v <= w_dim; ++v, pv *= p) rows.push_back({v, Rational(pv) > big, Rational(pv) >= gm});
  return rows;
}

std::vector<SylowRow> sylow_extension_criteria(const CoverSpec& spec, const Rational& M) {
  return sylow_extension_criteria(spec.p(), genus(spec), spec.n(), spec.v(), M);
}

}  // namespace bigaction
