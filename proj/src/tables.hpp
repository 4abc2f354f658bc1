// Copyright 2026 The bigaction Authors
// SPDX-License-Identifier: Apache-2.0

// Table rows shared by the constructors and the verifiers. Each function
// evaluates one printed relation; names follow the monomial whose coefficient
// the row determines.

#pragma once

#include <cstdint>
#include <vector>

#include "bigaction/field.hpp"
#include "bigaction/ore.hpp"
#include "bigaction/polyring.hpp"

namespace bigaction::tables {

inline FieldElem k(const FieldElem& like, int64_t v) { return FieldElem::from_int(like.ctx(), v); }

// x^(p^e) for e >= 0 and x^(-p^e) written as frob(e).inv().
inline FieldElem fr(const FieldElem& x, int e) { return x.frob(e); }

// p^e as an exponent
inline uint64_t pe(uint32_t p, int e) {
  uint64_t r = 1;
  for (int i = 0; i < e; ++i) r *= p;
  return r;
}

// Single-function noncentral s=1 rows, parameter b = b_{1+2p}.
//   2 a_2^p = -b^{-p} (b^{p^2} + b)
//   3 b_3^p = b^{-p} (b^{2p^2} - b^2)
inline FieldElem s1_a2(const FieldElem& b) {
  return (-(fr(b, 2) + b) / (fr(b, 1) * k(b, 2))).pth_root();
}
inline FieldElem s1_b3(const FieldElem& b) {
  return ((fr(b, 2) * fr(b, 2) - b * b) / (fr(b, 1) * k(b, 3))).pth_root();
}
// The additive polynomial X^{p^2} + 2 a_2^p X^p + X.
inline AdditivePoly s1_kernel(const FieldElem& a2) {
  const FieldCtx& c = a2.ctx();
  return AdditivePoly(c, {FieldElem::one(c), fr(a2, 1) * k(a2, 2), FieldElem::one(c)});
}
// ell(y) = 2 (b y^p - b^p y)
inline FieldElem s1_ell(const FieldElem& b, const FieldElem& y) { return (b * fr(y, 1) - fr(b, 1) * y) * k(b, 2); }

}  // namespace bigaction::tables
