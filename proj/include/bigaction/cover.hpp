// Copyright 2026 The bigaction Authors
// SPDX-License-Identifier: Apache-2.0

// Artin-Schreier covers W_i^p - W_i = f_i(X) of the affine line together with a
// space V of translations X -> X + y that lift to the curve.

#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <vector>

#include "bigaction/field.hpp"
#include "bigaction/polyring.hpp"

namespace bigaction {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// "num/den", or just "num" for integers.
std::string to_string(const Rational& r);
Rational parse_rational(const std::string& s);

struct CoverSpec {
  const FieldCtx* ctx = nullptr;
  std::vector<Poly> functions;
  std::vector<FieldElem> V;

  uint32_t p() const { return ctx->p(); }
  int n() const { return static_cast<int>(functions.size()); }
  int v() const { return static_cast<int>(V.size()); }
};

// Moves the whole spec into a larger field in one step.
CoverSpec embed(const CoverSpec& spec, const FieldCtx& big);

// Degrees sorted ascending and leading coefficients F_p-independent within each
// block of equal degree, so that deg(sum l_i f_i) = max deg f_i over l_i != 0.
bool check_adapted_basis(const std::vector<Poly>& fs);
// Reduces, sorts and eliminates leading coefficients until the basis is
// adapted. Throws DependentFunctions when the classes are F_p-dependent.
std::vector<Poly> adapt_basis(std::vector<Poly> fs);

// Throws InvalidSpec naming the first violated invariant.
void validate(const CoverSpec& spec);

Int genus(const CoverSpec& spec);
// Conductor-discriminant count over all p^n - 1 nonzero combinations.
Int genus_oracle(const CoverSpec& spec);

// ell[i][j] for j < i solves red(f_i(X+y) - f_i(X)) = sum_j ell[i][j] f_j up
// to constants.
struct RepMatrix {
  FieldElem y;
  std::vector<std::vector<uint32_t>> ell;

  uint32_t at(int j, int i) const { return ell[i][j]; }
  bool is_identity() const;
  // Full n x n unipotent upper-triangular matrix L with L[j][i] = ell_{j,i}.
  FpMatrix matrix(uint32_t p) const;
};

// Throws NotExtendable when y does not lift.
RepMatrix rep_matrix(const CoverSpec& spec, const FieldElem& y);
std::optional<RepMatrix> try_rep_matrix(const CoverSpec& spec, const FieldElem& y);
bool check_embedding(const CoverSpec& spec);

// Solves for h = base + sum_{e in support} x_e X^e, x_e in the spec field, such
// that every y in spec.V satisfies red(h(X+y) - h(X)) = sum_j ell_j(y) f_j up to
// constants, where f_j are spec.functions and the ell_j(y) in F_p are unknowns
// too. The system is F_p-linear in all unknowns.
struct EquivariantSolution {
  Poly h;
  std::vector<std::vector<uint32_t>> ell;  // ell[k][j] for V[k]
  std::vector<Poly> homogeneous;           // corrections that can be added freely
};
std::optional<EquivariantSolution> solve_equivariant(const CoverSpec& spec, const Poly& base,
                                                     const std::vector<size_t>& support);

// True when every f_i has the shape X*S_i(X) + c_i X.
bool has_xs_shape(const CoverSpec& spec);
// Trivial representation on the V basis. Compared against has_xs_shape; the two
// must agree whenever the spec is a big action.
bool is_central_rep(const CoverSpec& spec);

struct BigActionReport {
  Int g;
  Int order_G2;
  Int order_V;
  Int order_G;
  Rational ratio_g;
  Rational ratio_g2;
  Rational M;
  bool is_big_action = false;
  bool satisfies_star = false;
  bool satisfies_GM = false;
};

// 4/(p^2-1)^2
Rational star_threshold(uint32_t p);
// 2p/(p-1)
Rational big_action_threshold(uint32_t p);
BigActionReport make_report(uint32_t p, const Int& g, int n, int v, const Rational& M);
BigActionReport report(const CoverSpec& spec, const Rational& M);

}  // namespace bigaction
