// Copyright 2026 The bigaction Authors
// SPDX-License-Identifier: Apache-2.0

// Finiteness bounds for big actions satisfying |G|/g^2 >= M. All of them live
// in Q(sqrt(1+M)) and are compared exactly.

#pragma once

#include <string>
#include <vector>

#include "bigaction/cover.hpp"

namespace bigaction {

// a + b*sqrt(d) with rational a, b, d and d >= 0.
class Surd {
 public:
  Surd() = default;
  Surd(Rational a, Rational b, Rational d);
  static Surd rational(const Rational& a, const Rational& d) { return Surd(a, 0, d); }

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  const Rational& radicand() const { return d_; }

  Surd operator+(const Surd& o) const;
  Surd operator-(const Surd& o) const;
  Surd operator*(const Surd& o) const;
  Surd operator/(const Surd& o) const;
  Surd operator*(const Rational& k) const;
  Surd inv() const;

  // -1, 0 or 1, decided by squaring.
  int sign() const;
  int compare(const Rational& r) const { return (*this - Surd::rational(r, d_)).sign(); }
  int compare(const Surd& o) const { return (*this - o).sign(); }
  // Largest integer <= value.
  Int floor() const;
  std::string str() const;

 private:
  void check_same(const Surd& o) const;

  Rational a_ = 0;
  Rational b_ = 0;
  Rational d_ = 0;
};

// Throws InvalidM unless 0 < M <= 4p/(p-1)^2.
void check_M(const Rational& M, uint32_t p);

// 2 + M + 2 sqrt(1+M)
Surd phi(const Rational& M);
// The real bound 4p/(p-1)^2 * phi(M)/M^2 on |G'|.
Surd gprime_bound(const Rational& M, uint32_t p);
// Largest power of p not exceeding gprime_bound.
Int bound_Gprime(const Rational& M, uint32_t p);

// Strict genus bound (p-1)|G'||V|/(2p) for a big action. The extra factor p-1
// relative to the form sometimes quoted is what the definition of a big action
// actually yields; see README.
Rational bound_genus(uint32_t p, const Int& order_V, const Int& order_G2);
// The weaker M-only form 2/(p-1) * phi(M)/M^2 * |V|.
Surd bound_genus_M(const Rational& M, uint32_t p, const Int& order_V);

// |G'| not central: |V| <= 16p/(p-1)^4 phi/M^3 and g < 32p/(p-1)^5 phi^2/M^5.
struct NontrivialBounds {
  Surd V;
  Surd g;
};
NontrivialBounds bounds_nontrivial(const Rational& M, uint32_t p);

// G' central elementary abelian:
//   p^{2 s1}/g^2 >= (p-1)^2/(4p) * M^3/phi  and
//   (p-1)^4/(16p) * M^3/phi <= |V|/p^{2 s1} <= 1.
struct TrivialBounds {
  Surd ratio_g2_lower;
  Surd V_ratio_lower;
};
TrivialBounds bounds_trivial(const Rational& M, uint32_t p);

struct SylowRow {
  int v = 0;
  bool big_action = false;  // p^v > 2p/(p-1) * g/p^n
  bool gm = false;          // p^v >= M g^2/p^n
};
// Evaluates both criteria for every subspace dimension 0..w_dim.
std::vector<SylowRow> sylow_extension_criteria(uint32_t p, const Int& g, int n, int w_dim, const Rational& M);
std::vector<SylowRow> sylow_extension_criteria(const CoverSpec& spec, const Rational& M);

}  // namespace bigaction
