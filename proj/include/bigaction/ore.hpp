// Copyright 2026 The bigaction Authors
// SPDX-License-Identifier: Apache-2.0

// The skew ring k{F} of additive polynomials sum a_j F^j, where F is the
// Frobenius and F a = a^p F. Multiplication is composition.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bigaction/field.hpp"
#include "bigaction/polyring.hpp"

namespace bigaction {

class AdditivePoly {
 public:
  AdditivePoly() = default;
  explicit AdditivePoly(const FieldCtx& ctx) : ctx_(&ctx) {}
  AdditivePoly(const FieldCtx& ctx, std::vector<FieldElem> coeffs);

  static AdditivePoly identity(const FieldCtx& ctx) { return scalar(FieldElem::one(ctx)); }
  static AdditivePoly scalar(const FieldElem& c) { return term(c, 0); }
  // c F^k
  static AdditivePoly term(const FieldElem& c, int k);
  // Reads a plain polynomial whose exponents are all powers of p.
  static AdditivePoly from_poly(const Poly& f);

  const FieldCtx& ctx() const { return *ctx_; }
  int deg() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_separable() const { return !c_.empty() && !c_[0].is_zero(); }
  const std::vector<FieldElem>& coeffs() const { return c_; }
  FieldElem coeff(int j) const;
  FieldElem leading() const;

  AdditivePoly operator+(const AdditivePoly& o) const;
  AdditivePoly operator-(const AdditivePoly& o) const;
  // Composition: (A*B)(x) = A(B(x)).
  AdditivePoly operator*(const AdditivePoly& o) const;
  bool operator==(const AdditivePoly& o) const;
  bool operator!=(const AdditivePoly& o) const { return !(*this == o); }

  FieldElem evaluate(const FieldElem& x) const;
  Poly to_poly() const;
  AdditivePoly monic() const;
  std::string str() const;

 private:
  void normalize();

  const FieldCtx* ctx_ = nullptr;
  std::vector<FieldElem> c_;
};

AdditivePoly ore_mul(const AdditivePoly& a, const AdditivePoly& b);

struct OreDivMod {
  AdditivePoly q;
  AdditivePoly r;
};

// a = q*b + r with deg r < deg b.
OreDivMod ore_right_divmod(const AdditivePoly& a, const AdditivePoly& b);
// Monic generator of the left ideal k{F}a + k{F}b; its roots are Z(a) n Z(b).
AdditivePoly ore_right_gcd(const AdditivePoly& a, const AdditivePoly& b);

AdditivePoly embed(const AdditivePoly& a, const FieldCtx& big);

// f = X*S(X) + c*X, with any constant term of f ignored.
struct XSForm {
  AdditivePoly s;
  FieldElem c;
};
std::optional<XSForm> xs_decompose(const Poly& f);

// The palindromic polynomial Ad_f of f = X*S(X) + cX, normalized to be monic.
AdditivePoly palindromic(const Poly& f);

struct RootSpace {
  const FieldCtx* ctx = nullptr;
  std::vector<FieldElem> basis;
  bool inseparable = false;
};

// Extension-degree cap for automatic searches: BIGACTION_MAX_EXT when set,
// else 64.
int max_ext_degree();

// Smallest extension GF(p^{m'}) (m' a multiple of the input degree, m' <=
// max_degree) in which a has its full root space, with an F_p-basis of it.
// max_degree <= 0 means max_ext_degree().
RootSpace root_space(const AdditivePoly& a, int max_degree = 0, bool allow_inseparable = false);

// Root space inside the given field, without searching for extensions.
std::vector<FieldElem> roots_in(const AdditivePoly& a, const FieldCtx& ctx);

// All F_p-combinations of the basis; digit i of the index is the coefficient
// of basis[i].
std::vector<FieldElem> span_elements(const std::vector<FieldElem>& basis);
// Rank of a family of field elements over F_p.
size_t fp_rank_of(const std::vector<FieldElem>& elems);
// The additive polynomial prod_{v in span}(X - v), monic.
AdditivePoly subspace_polynomial(const std::vector<FieldElem>& basis);

}  // namespace bigaction
