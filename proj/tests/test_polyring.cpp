#include <boost/multiprecision/cpp_int.hpp>
#include <random>

#include "bigaction/error.hpp"
#include "bigaction/polyring.hpp"
#include "doctest.h"

using namespace bigaction;
using boost::multiprecision::cpp_int;

namespace {

FieldElem k(const FieldCtx& ctx, int64_t v) { return FieldElem::from_int(ctx, v); }

Poly mono(const FieldCtx& ctx, int64_t c, size_t e) { return Poly::monomial(k(ctx, c), e); }

Poly random_poly(const FieldCtx& ctx, std::mt19937_64& rng, size_t deg) {
  std::vector<FieldElem> c;
  for (size_t i = 0; i <= deg; ++i) c.push_back(FieldElem::random(ctx, rng));
  return Poly(ctx, c);
}

int digit_sum(uint64_t e, uint32_t p) {
  int s = 0;
  for (; e; e /= p) s += static_cast<int>(e % p);
  return s;
}

// Integer polynomials for the Witt ghost-component oracle.
using ZPoly = std::vector<cpp_int>;

ZPoly zmul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

ZPoly zadd(ZPoly a, const ZPoly& b, int sign = 1) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (size_t i = 0; i < b.size(); ++i) a[i] += sign * b[i];
  return a;
}

ZPoly zpow(const ZPoly& a, unsigned e) {
  ZPoly r{1};
  for (unsigned i = 0; i < e; ++i) r = zmul(r, a);
  return r;
}

ZPoly zphi(const ZPoly& a, unsigned p) {
  if (a.empty()) return a;
  ZPoly r((a.size() - 1) * p + 1, 0);
  for (size_t i = 0; i < a.size(); ++i) r[i * p] = a[i];
  return r;
}

ZPoly lift(const Poly& f) {
  ZPoly r;
  for (const auto& c : f.coeffs()) r.push_back(c.coord(0));
  return r;
}

Poly drop(const FieldCtx& ctx, const ZPoly& a) {
  std::vector<FieldElem> c;
  for (const auto& v : a) {
    cpp_int m = v % ctx.p();
    if (m < 0) m += ctx.p();
    c.push_back(k(ctx, static_cast<int64_t>(m)));
  }
  return Poly(ctx, c);
}

// wp on W_2(F_p[X]) computed through ghost components over Z[X], with the
// Frobenius lifted to X -> X^p.
Witt2Poly ghost_wp(const Witt2Poly& w) {
  const FieldCtx& ctx = w.w0.ctx();
  const unsigned p = ctx.p();
  const ZPoly a0 = lift(w.w0), a1 = lift(w.w1);
  const ZPoly f0 = zphi(a0, p), f1 = zphi(a1, p);
  const ZPoly g0 = zadd(f0, a0, -1);
  const ZPoly g1 = zadd(zadd(zpow(f0, p), zmul({cpp_int(p)}, f1)), zadd(zpow(a0, p), zmul({cpp_int(p)}, a1)), -1);
  ZPoly d1 = zadd(g1, zpow(g0, p), -1);
  for (auto& c : d1) {
    REQUIRE(c % p == 0);
    c /= p;
  }
  return {drop(ctx, g0), drop(ctx, d1)};
}

}  // namespace

TEST_CASE("wp examples") {
  const auto& f2 = FieldCtx::get(2, 1);
  CHECK(wp(Poly(f2)).is_zero());
  CHECK(wp(Poly::x(f2)) == mono(f2, 1, 2) + mono(f2, 1, 1));
  const auto& f9 = FieldCtx::get(3, 2);
  const auto a = FieldElem::gen(f9) + k(f9, 2);
  CHECK(wp(Poly::monomial(a, 1)) == Poly::monomial(a.pow(3), 3) - Poly::monomial(a, 1));
}

TEST_CASE("reduce_mod_wp examples") {
  const auto& f3 = FieldCtx::get(3, 1);
  CHECK(reduce_mod_wp(mono(f3, 1, 3)) == Poly::x(f3));
  const Poly f = mono(f3, 1, 9) + mono(f3, 1, 3) + Poly::x(f3);
  CHECK(reduce_mod_wp(f).is_zero());
  // X^9 + X^3 + X = wp(X^3 + 2X)
  CHECK(wp(mono(f3, 1, 3) + mono(f3, 2, 1)) == f);
  const auto& f25 = FieldCtx::get(5, 2);
  const auto c = FieldElem::gen(f25);
  CHECK(reduce_mod_wp(Poly::monomial(c, 5 * 7)) == Poly::monomial(c.pth_root(), 7));
  // constants: kept only when outside wp(field)
  for (const auto& x : all_elements(f25)) {
    const Poly r = reduce_mod_wp(Poly::constant(x));
    CHECK(r.is_zero() == (x.trace() == 0));
  }
}

TEST_CASE("reduction is invariant under adding wp-images and idempotent") {
  std::mt19937_64 rng(11);
  for (auto [p, m] : {std::pair{2, 3}, {3, 2}, {5, 2}, {7, 1}}) {
    const auto& ctx = FieldCtx::get(p, m);
    for (int it = 0; it < 100; ++it) {
      const Poly f = random_poly(ctx, rng, 1 + it % 30);
      const Poly g = random_poly(ctx, rng, it % 7);
      const Poly r = reduce_mod_wp(f);
      CHECK(reduce_mod_wp(f + wp(g)) == r);
      CHECK(reduce_mod_wp(r) == r);
      for (size_t e = 1; e < r.coeffs().size(); ++e)
        if (e % p == 0) CHECK(r.coeffs()[e].is_zero());
      CHECK(equal_mod_wp(f, f + wp(g) + Poly::constant(FieldElem::random(ctx, rng))));
    }
  }
}

TEST_CASE("wp_preimage") {
  const auto& ctx = FieldCtx::get(3, 2);
  CHECK(wp_preimage(Poly(ctx)).is_zero());
  CHECK(wp_preimage(mono(ctx, 1, 3) - Poly::x(ctx)) == Poly::x(ctx));
  const auto a = FieldElem::gen(ctx);
  CHECK(wp_preimage(Poly::monomial(a.pow(3), 3) - Poly::monomial(a, 1)) == Poly::monomial(a, 1));
  CHECK_THROWS_AS(wp_preimage(Poly::x(ctx)), Error);
  // constant with nonzero trace
  FieldElem nz = FieldElem::one(ctx);
  for (const auto& x : all_elements(ctx))
    if (x.trace() != 0) nz = x;
  CHECK_THROWS_AS(wp_preimage(Poly::constant(nz)), Error);

  std::mt19937_64 rng(12);
  for (auto [p, m] : {std::pair{2, 4}, {3, 3}, {5, 2}}) {
    const auto& c = FieldCtx::get(p, m);
    for (int it = 0; it < 100; ++it) {
      const Poly g = random_poly(c, rng, it % 9);
      const Poly h = wp(g);
      const Poly back = wp_preimage(h);
      CHECK(wp(back) == h);
      CHECK(back.coeff(0).coord(0) == 0);
      CHECK((back - g).degree() <= 0);
    }
  }
}

TEST_CASE("translate and delta") {
  const auto& ctx = FieldCtx::get(3, 2);
  const auto y = FieldElem::gen(ctx) + k(ctx, 1);
  CHECK(delta(mono(ctx, 1, 7), FieldElem::zero(ctx)).is_zero());
  CHECK(delta(mono(ctx, 1, 2), y) == Poly::monomial(y.scale(2), 1) + Poly::constant(y * y));
  // delta(X^{1+p}, y) = y X^p + y^p X + y^{1+p}
  CHECK(delta(mono(ctx, 1, 4), y) ==
        Poly::monomial(y, 3) + Poly::monomial(y.pow(3), 1) + Poly::constant(y.pow(4)));

  std::mt19937_64 rng(13);
  for (auto [p, m] : {std::pair{2, 3}, {3, 2}, {5, 1}, {7, 2}}) {
    const auto& c = FieldCtx::get(p, m);
    for (int it = 0; it < 60; ++it) {
      const Poly f = random_poly(c, rng, 1 + it % 20);
      const auto y1 = FieldElem::random(c, rng), y2 = FieldElem::random(c, rng), x = FieldElem::random(c, rng);
      CHECK(translate(f, y1).eval(x) == f.eval(x + y1));
      CHECK(delta(f, y1 + y2) == delta(translate(f, y2), y1) + delta(f, y2));
      CHECK(delta(f, y1).degree() < f.degree());
    }
  }
}

TEST_CASE("sigma membership") {
  const auto& f3 = FieldCtx::get(3, 1);
  CHECK(sigma_membership(Poly::x(f3), 1));
  CHECK(sigma_membership(mono(f3, 1, 4), 2));
  CHECK_FALSE(sigma_membership(mono(f3, 1, 4), 1));
  CHECK(sigma_membership(mono(f3, 1, 7), 3));
  CHECK_FALSE(sigma_membership(mono(f3, 1, 7), 2));
  CHECK(sigma_membership(Poly::constant(k(f3, 2)), 1));
  CHECK_THROWS_AS(sigma_membership(Poly::x(f3), 0), Error);

  // The minimal count of p-power summands is the base-p digit sum.
  for (uint32_t p : {2u, 3u, 5u, 7u, 11u}) {
    const auto best = min_ppower_terms(3000, p);
    for (uint64_t e = 1; e <= 3000; ++e) CHECK(best[e] == digit_sum(e, p));
  }
}

TEST_CASE("delta lowers the sigma level") {
  std::mt19937_64 rng(14);
  for (auto [p, m] : {std::pair{2, 3}, {3, 2}, {5, 2}}) {
    const auto& ctx = FieldCtx::get(p, m);
    const auto best = min_ppower_terms(200, p);
    for (int t = 1; t <= 4; ++t) {
      for (int it = 0; it < 25; ++it) {
        Poly f(ctx);
        for (uint64_t e = 1; e <= 200; ++e)
          if (best[e] <= t && uniform_below(rng, 4) == 0) f.set_coeff(e, FieldElem::random(ctx, rng));
        REQUIRE(sigma_membership(f, t));
        const Poly d = delta(f, FieldElem::random(ctx, rng));
        if (t > 1) {
          CHECK(sigma_membership(d, t - 1));
        } else {
          CHECK(d.degree() <= 0);
        }
        for (int u = t; u <= 5; ++u) CHECK(sigma_membership(f, u));
      }
    }
  }
}

TEST_CASE("witt carry polynomial") {
  CHECK(witt_carry_coefficients(2) == std::vector<uint32_t>{0, 1, 0});
  // p = 3: -(3xy^2 + 3x^2y)/3 = -xy^2 - x^2y
  CHECK(witt_carry_coefficients(3) == std::vector<uint32_t>{0, 2, 2, 0});
}

TEST_CASE("witt2_wp") {
  const auto& f2 = FieldCtx::get(2, 1);
  const Witt2Poly w{Poly::x(f2), Poly(f2)};
  const Witt2Poly r = witt2_wp(w);
  CHECK(r.w0 == mono(f2, 1, 2) + Poly::x(f2));
  CHECK(r == ghost_wp(w));
  CHECK(r.w1 == mono(f2, 1, 3) + mono(f2, 1, 2));

  const auto& f3 = FieldCtx::get(3, 1);
  const Poly f = mono(f3, 1, 4) + mono(f3, 2, 1);
  CHECK(witt2_wp({Poly(f3), f}) == Witt2Poly{Poly(f3), wp(f)});
  CHECK(witt2_wp({Poly::constant(k(f3, 2)), Poly(f3)}).w0.is_zero());

  std::mt19937_64 rng(15);
  for (uint32_t p : {2u, 3u, 5u}) {
    const auto& ctx = FieldCtx::get(p, 1);
    for (int it = 0; it < 25; ++it) {
      const Witt2Poly a{random_poly(ctx, rng, it % 4), random_poly(ctx, rng, it % 3)};
      const Witt2Poly b{random_poly(ctx, rng, it % 5), random_poly(ctx, rng, 2)};
      CHECK(witt2_wp(a) == ghost_wp(a));
      CHECK(witt2_wp(witt2_add(a, b)) == witt2_add(witt2_wp(a), witt2_wp(b)));
      CHECK(witt2_sub(witt2_add(a, b), b) == a);
    }
  }
}
