// Copyright 2026 The bigaction Authors
// SPDX-License-Identifier: Apache-2.0

#include "bigaction/cover.hpp"

#include <algorithm>

#include "bigaction/error.hpp"
#include "bigaction/ore.hpp"

namespace bigaction {

std::string to_string(const Rational& r) {
  const Int num = boost::multiprecision::numerator(r);
  const Int den = boost::multiprecision::denominator(r);
  return den == 1 ? num.str() : num.str() + "/" + den.str();
}

Rational parse_rational(const std::string& s) {
  try {
    const auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(Int(s));
    const Int den(s.substr(slash + 1));
    if (den == 0) fail("InvalidArgument", "zero denominator in '" + s + "'");
    return Rational(Int(s.substr(0, slash)), den);
  } catch (const std::runtime_error& e) {
    if (dynamic_cast<const Error*>(&e)) throw;
    fail("InvalidArgument", "not a rational number: '" + s + "'");
  }
}

CoverSpec embed(const CoverSpec& spec, const FieldCtx& big) {
  CoverSpec out{&big, {}, {}};
  for (const auto& f : spec.functions) out.functions.push_back(embed(f, big));
  for (const auto& y : spec.V) out.V.push_back(embed(y, big));
  return out;
}

namespace {

Int ipow(uint32_t p, int e) {
  Int r = 1;
  for (int i = 0; i < e; ++i) r *= p;
  return r;
}

// Equal-degree blocks [begin, end) of a degree-sorted list.
std::vector<std::pair<size_t, size_t>> degree_blocks(const std::vector<Poly>& fs) {
  std::vector<std::pair<size_t, size_t>> out;
  for (size_t i = 0; i < fs.size();) {
    size_t j = i;
    while (j < fs.size() && fs[j].degree() == fs[i].degree()) ++j;
    out.emplace_back(i, j);
    i = j;
  }
  return out;
}

// Kernel of the leading-coefficient map of a block, as F_p relations.
std::vector<FpVector> leading_relations(const std::vector<Poly>& fs, size_t b, size_t e) {
  const FieldCtx& ctx = fs[b].ctx();
  FpMatrix mat(ctx.p(), ctx.m(), e - b);
  for (size_t j = b; j < e; ++j) {
    const FieldElem lc = fs[j].leading();
    for (int i = 0; i < ctx.m(); ++i) mat.at(i, j - b) = lc.coord(i);
  }
  return fp_kernel(mat);
}

}  // namespace

bool check_adapted_basis(const std::vector<Poly>& fs) {
  for (size_t i = 0; i < fs.size(); ++i) {
    if (fs[i].degree() < 1) return false;
    if (i && fs[i].degree() < fs[i - 1].degree()) return false;
  }
  for (auto [b, e] : degree_blocks(fs))
    if (!leading_relations(fs, b, e).empty()) return false;
  return true;
}

std::vector<Poly> adapt_basis(std::vector<Poly> fs) {
  for (auto& f : fs) f = reduce_mod_wp(f).without_constant();
  for (;;) {
    for (const auto& f : fs)
      if (f.is_zero()) fail("DependentFunctions", "the classes of the functions are F_p-dependent");
    std::stable_sort(fs.begin(), fs.end(), [](const Poly& a, const Poly& b) { return a.degree() < b.degree(); });
    bool changed = false;
    for (auto [b, e] : degree_blocks(fs)) {
      const auto rel = leading_relations(fs, b, e);
      if (rel.empty()) continue;
      // The kernel vector has a 1 at its free column, which is also its last
      // nonzero entry; that function is replaced by the relation.
      const FpVector& r = rel.front();
      size_t last = 0;
      Poly comb(fs[b].ctx());
      for (size_t j = 0; j < r.size(); ++j) {
        if (!r[j]) continue;
        comb += fs[b + j].scale(r[j]);
        last = j;
      }
      fs[b + last] = comb;
      changed = true;
      break;
    }
    if (!changed) return fs;
  }
}

void validate(const CoverSpec& spec) {
  if (!spec.ctx) fail("InvalidSpec", "missing field context");
  if (spec.functions.empty()) fail("InvalidSpec", "no functions");
  const uint32_t p = spec.p();
  for (size_t i = 0; i < spec.functions.size(); ++i) {
    const Poly& f = spec.functions[i];
    const std::string tag = "f_" + std::to_string(i + 1);
    if (f.ctx_ptr() != spec.ctx) fail("InvalidSpec", tag + " lives in another field");
    if (reduce_mod_wp(f).without_constant() != f.without_constant()) fail("InvalidSpec", tag + " is not reduced");
    if (f.degree() < 1 || f.degree() % p == 0)
      fail("InvalidSpec", tag + " has degree " + std::to_string(f.degree()) + ", not coprime to p");
  }
  if (!check_adapted_basis(spec.functions)) fail("InvalidSpec", "functions are not an adapted basis");
  for (const auto& y : spec.V)
    if (y.ctx_ptr() != spec.ctx) fail("InvalidSpec", "V element lives in another field");
  if (fp_rank_of(spec.V) != spec.V.size()) fail("InvalidSpec", "V is not F_p-independent");
  if (!check_embedding(spec)) fail("InvalidSpec", "some element of V does not lift to an automorphism");
}

Int genus(const CoverSpec& spec) {
  const uint32_t p = spec.p();
  Int sum = 0, pw = 1;
  for (const auto& f : spec.functions) {
    sum += pw * Int(f.degree() - 1);
    pw *= p;
  }
  const Int twice = (p - 1) * sum;
  if (twice % 2 != 0) fail("NonIntegerGenus", "odd (p-1) * sum p^{i-1}(m_i - 1)");
  return twice / 2;
}

Int genus_oracle(const CoverSpec& spec) {
  const uint32_t p = spec.p();
  const int n = spec.n();
  uint64_t total = 1;
  for (int i = 0; i < n; ++i) total *= p;
  Int cond = 0;
  for (uint64_t idx = 1; idx < total; ++idx) {
    Poly comb(*spec.ctx);
    uint64_t t = idx;
    for (int i = 0; i < n; ++i, t /= p)
      if (t % p) comb += spec.functions[i].scale(static_cast<uint32_t>(t % p));
    const long d = reduce_mod_wp(comb).degree();
    if (d < 1) fail("InvalidSpec", "a nonzero combination of the functions is trivial mod wp");
    cond += d + 1;
  }
  // 2g - 2 = -2 p^n + sum of conductors
  const Int twice = cond - 2 * Int(total) + 2;
  if (twice % 2 != 0) fail("NonIntegerGenus", "odd different degree");
  return twice / 2;
}

bool RepMatrix::is_identity() const {
  for (const auto& row : ell)
    for (auto x : row)
      if (x) return false;
  return true;
}

FpMatrix RepMatrix::matrix(uint32_t p) const {
  const size_t n = ell.size();
  FpMatrix m(p, n, n);
  for (size_t i = 0; i < n; ++i) {
    m.at(i, i) = 1;
    for (size_t j = 0; j < i; ++j) m.at(j, i) = ell[i][j];
  }
  return m;
}

std::optional<RepMatrix> try_rep_matrix(const CoverSpec& spec, const FieldElem& y) {
  const FieldCtx& ctx = *spec.ctx;
  const int n = spec.n();
  const int m = ctx.m();
  RepMatrix out{y, std::vector<std::vector<uint32_t>>(n)};
  for (int i = 0; i < n; ++i) {
    const Poly r = reduce_mod_wp(delta(spec.functions[i], y));
    long top = r.degree();
    for (int j = 0; j < i; ++j) top = std::max(top, spec.functions[j].degree());
    // Unknowns ell_{j,i}; one equation per exponent >= 1 and coordinate.
    const size_t rows = top >= 1 ? static_cast<size_t>(top) * m : 0;
    FpMatrix mat(ctx.p(), rows, i);
    FpVector rhs(rows, 0);
    for (long e = 1; e <= top; ++e) {
      const size_t base = static_cast<size_t>(e - 1) * m;
      const FieldElem re = r.coeff(e);
      for (int t = 0; t < m; ++t) rhs[base + t] = re.coord(t);
      for (int j = 0; j < i; ++j) {
        const FieldElem fe = spec.functions[j].coeff(e);
        for (int t = 0; t < m; ++t) mat.at(base + t, j) = fe.coord(t);
      }
    }
    FpVector sol;
    if (!fp_solve(mat, rhs, sol)) return std::nullopt;
    sol.resize(i, 0);
    out.ell[i] = sol;
  }
  return out;
}

RepMatrix rep_matrix(const CoverSpec& spec, const FieldElem& y) {
  auto r = try_rep_matrix(spec, y);
  if (!r) fail("NotExtendable", "translation by " + y.str() + " does not lift");
  return *r;
}

bool check_embedding(const CoverSpec& spec) {
  // Liftable translations form a group, so the basis decides; pairwise sums
  // are checked as well since they are cheap.
  for (size_t a = 0; a < spec.V.size(); ++a) {
    if (!try_rep_matrix(spec, spec.V[a])) return false;
    for (size_t b = a + 1; b < spec.V.size(); ++b)
      if (!try_rep_matrix(spec, spec.V[a] + spec.V[b])) return false;
  }
  return true;
}

std::optional<EquivariantSolution> solve_equivariant(const CoverSpec& spec, const Poly& base,
                                                     const std::vector<size_t>& support) {
  const FieldCtx& ctx = *spec.ctx;
  const uint32_t p = ctx.p();
  const int m = ctx.m();
  const size_t n = spec.functions.size();
  const size_t nv = spec.V.size();
  std::vector<FieldElem> basis;
  for (int t = 0; t < m; ++t) {
    std::vector<uint32_t> e(m, 0);
    e[t] = 1;
    basis.push_back(FieldElem::from_coords(ctx, e));
  }
  // Columns: x_{e,t} first, then ell_{k,j}.
  const size_t nx = support.size() * m;
  const size_t cols = nx + nv * n;
  std::vector<std::vector<Poly>> col_images(nv);
  std::vector<Poly> rhs_images(nv);
  long top = 0;
  for (const auto& f : spec.functions) top = std::max(top, f.degree());
  for (size_t k = 0; k < nv; ++k) {
    const FieldElem& y = spec.V[k];
    rhs_images[k] = reduce_mod_wp(delta(base, y));
    top = std::max(top, rhs_images[k].degree());
    for (size_t e : support)
      for (int t = 0; t < m; ++t) {
        col_images[k].push_back(reduce_mod_wp(delta(Poly::monomial(basis[t], e), y)));
        top = std::max(top, col_images[k].back().degree());
      }
  }
  if (top < 1) top = 1;
  const size_t per_y = static_cast<size_t>(top) * m;
  FpMatrix mat(p, nv * per_y, cols);
  FpVector rhs(nv * per_y, 0);
  for (size_t k = 0; k < nv; ++k) {
    const size_t row0 = k * per_y;
    for (long e = 1; e <= top; ++e) {
      const size_t r = row0 + static_cast<size_t>(e - 1) * m;
      // red(delta(base)) + sum x col - sum ell f = 0
      const FieldElem b = rhs_images[k].coeff(e);
      for (int t = 0; t < m; ++t) rhs[r + t] = (p - b.coord(t)) % p;
      for (size_t c = 0; c < nx; ++c) {
        const FieldElem v = col_images[k][c].coeff(e);
        for (int t = 0; t < m; ++t) mat.at(r + t, c) = v.coord(t);
      }
      for (size_t j = 0; j < n; ++j) {
        const FieldElem v = spec.functions[j].coeff(e);
        for (int t = 0; t < m; ++t) mat.at(r + t, nx + k * n + j) = (p - v.coord(t)) % p;
      }
    }
  }
  FpVector sol;
  if (!fp_solve(mat, rhs, sol)) return std::nullopt;
  sol.resize(cols, 0);
  auto correction = [&](const FpVector& v) {
    Poly h(ctx);
    for (size_t i = 0; i < support.size(); ++i) {
      std::vector<uint32_t> c(v.begin() + i * m, v.begin() + (i + 1) * m);
      h += Poly::monomial(FieldElem::from_coords(ctx, c), support[i]);
    }
    return h;
  };
  EquivariantSolution out{base + correction(sol), std::vector<std::vector<uint32_t>>(nv), {}};
  for (size_t k = 0; k < nv; ++k) out.ell[k].assign(sol.begin() + nx + k * n, sol.begin() + nx + (k + 1) * n);
  for (const auto& kv : fp_kernel(mat)) {
    const Poly c = correction(kv);
    if (!c.is_zero()) out.homogeneous.push_back(c);
  }
  return out;
}

bool has_xs_shape(const CoverSpec& spec) {
  for (const auto& f : spec.functions)
    if (!xs_decompose(f)) return false;
  return true;
}

bool is_central_rep(const CoverSpec& spec) {
  bool trivial = true;
  for (const auto& y : spec.V)
    if (!rep_matrix(spec, y).is_identity()) trivial = false;
  const bool shape = has_xs_shape(spec);
  if (trivial != shape && report(spec, star_threshold(spec.p())).is_big_action)
    fail("InconsistentRepresentation", std::string("representation is ") + (trivial ? "trivial" : "nontrivial") +
                                           " but the X*S(X) shape test says otherwise");
  return trivial;
}

Rational star_threshold(uint32_t p) {
  const Int q = Int(p) * p - 1;
  return Rational(4, q * q);
}

Rational big_action_threshold(uint32_t p) { return Rational(2 * p, p - 1); }

BigActionReport make_report(uint32_t p, const Int& g, int n, int v, const Rational& M) {
  if (g <= 0) fail("InvalidSpec", "genus must be positive");
  BigActionReport r;
  r.g = g;
  r.order_G2 = ipow(p, n);
  r.order_V = ipow(p, v);
  r.order_G = r.order_G2 * r.order_V;
  r.ratio_g = Rational(r.order_G, g);
  r.ratio_g2 = Rational(r.order_G, g * g);
  r.M = M;
  r.is_big_action = g >= 2 && r.ratio_g > big_action_threshold(p);
  r.satisfies_GM = r.is_big_action && r.ratio_g2 >= M;
  r.satisfies_star = r.is_big_action && r.ratio_g2 >= star_threshold(p);
  return r;
}

BigActionReport report(const CoverSpec& spec, const Rational& M) {
  return make_report(spec.p(), genus(spec), spec.n(), spec.v(), M);
}

}  // namespace bigaction
