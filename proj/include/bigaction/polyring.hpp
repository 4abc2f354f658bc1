// Copyright 2026 The bigaction Authors
// SPDX-License-Identifier: Apache-2.0

// Dense univariate polynomials over GF(p^m), the Artin-Schreier operator
// wp(f) = f^p - f and everything built from it.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bigaction/field.hpp"

namespace bigaction {

class Poly {
 public:
  static constexpr long kZeroDegree = -1;

  Poly() = default;
  explicit Poly(const FieldCtx& ctx) : ctx_(&ctx) {}
  Poly(const FieldCtx& ctx, std::vector<FieldElem> coeffs);

  static Poly monomial(const FieldElem& c, size_t e);
  static Poly constant(const FieldElem& c) { return monomial(c, 0); }
  static Poly x(const FieldCtx& ctx) { return monomial(FieldElem::one(ctx), 1); }

  const FieldCtx& ctx() const { return *ctx_; }
  const FieldCtx* ctx_ptr() const { return ctx_; }
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<FieldElem>& coeffs() const { return c_; }
  FieldElem coeff(size_t e) const;
  FieldElem leading() const;
  void set_coeff(size_t e, const FieldElem& v);
  void add_to_coeff(size_t e, const FieldElem& v);

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator-() const;
  Poly operator*(const Poly& o) const;
  Poly operator*(const FieldElem& k) const;
  Poly scale(uint32_t k) const;
  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }
  bool operator==(const Poly& o) const;
  bool operator!=(const Poly& o) const { return !(*this == o); }

  FieldElem eval(const FieldElem& x) const;
  // Ring p-th power: coefficients raised to the p-th power, exponents times p.
  Poly frobenius() const;
  Poly pow(unsigned e) const;
  // Drops the constant term.
  Poly without_constant() const;
  std::string str() const;

 private:
  void normalize();
  void check_same(const Poly& o) const;

  const FieldCtx* ctx_ = nullptr;
  std::vector<FieldElem> c_;
};

Poly embed(const Poly& f, const FieldCtx& big);

// f^p - f.
Poly wp(const Poly& f);

// The reduced representative: no exponent divisible by p except possibly 0.
// A constant term is dropped exactly when it lies in wp(field), i.e. has zero
// absolute trace. Other constants are replaced by Tr(c)*tau for a fixed tau of
// trace 1, so the result depends only on the class of f.
Poly reduce_mod_wp(const Poly& f);

// Equality modulo wp(k[X]) with constant terms ignored.
bool equal_mod_wp(const Poly& a, const Poly& b);

// Some kappa in the field with kappa^p - kappa = c, when one exists
// (iff Tr(c) = 0). The returned solution has coordinate 0 equal to zero.
std::optional<FieldElem> solve_wp_constant(const FieldElem& c);

struct WpSplit {
  Poly g;          // zero constant term
  FieldElem rest;  // wp(g) = h - rest
};

// Peels h into wp(g) plus a constant. Throws NotInImage when the reduced form
// of h has a nonconstant part.
WpSplit wp_preimage_mod_const(const Poly& h);

// The solution g of wp(g) = h whose constant term has zero first coordinate.
// Throws NotInImage when none exists in the current field.
Poly wp_preimage(const Poly& h);

Poly translate(const Poly& f, const FieldElem& y);
Poly delta(const Poly& f, const FieldElem& y);

// Minimal number of powers of p summing to e (e >= 1). Computed by dynamic
// programming over all p-power sums up to e.
std::vector<int> min_ppower_terms(uint64_t up_to, uint32_t p);
bool sigma_membership(const Poly& f, int t);
// Smallest t with f in Sigma_t (0 for constants).
int sigma_level(const Poly& f);

// Length-2 Witt vectors with polynomial entries.
struct Witt2Poly {
  Poly w0;
  Poly w1;
  bool operator==(const Witt2Poly& o) const { return w0 == o.w0 && w1 == o.w1; }
};

// (x^p + y^p - (x+y)^p)/p reduced mod p, coefficient of x^i y^{p-i} at index i.
std::vector<uint32_t> witt_carry_coefficients(uint32_t p);
Poly witt_carry(const Poly& x, const Poly& y);

Witt2Poly witt2_add(const Witt2Poly& a, const Witt2Poly& b);
Witt2Poly witt2_sub(const Witt2Poly& a, const Witt2Poly& b);
Witt2Poly witt2_frobenius(const Witt2Poly& a);
// F(w) - w in Witt arithmetic.
Witt2Poly witt2_wp(const Witt2Poly& w);

}  // namespace bigaction
