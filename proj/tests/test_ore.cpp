#include <random>
#include <set>

#include "bigaction/error.hpp"
#include "bigaction/ore.hpp"
#include "doctest.h"

using namespace bigaction;

namespace {

FieldElem k(const FieldCtx& ctx, int64_t v) { return FieldElem::from_int(ctx, v); }

AdditivePoly ints(const FieldCtx& ctx, std::vector<int64_t> c) {
  std::vector<FieldElem> v;
  for (auto x : c) v.push_back(k(ctx, x));
  return AdditivePoly(ctx, v);
}

AdditivePoly random_additive(const FieldCtx& ctx, std::mt19937_64& rng, int deg) {
  std::vector<FieldElem> c;
  for (int i = 0; i <= deg; ++i) c.push_back(FieldElem::random(ctx, rng));
  while (c.back().is_zero()) c.back() = FieldElem::random(ctx, rng);
  return AdditivePoly(ctx, c);
}

// f = X*S(X) + cX as a plain polynomial.
Poly xs_poly(const AdditivePoly& S, const FieldElem& c) {
  return Poly::x(S.ctx()) * S.to_poly() + Poly::monomial(c, 1);
}

std::set<uint64_t> index_set(const std::vector<FieldElem>& v) {
  std::set<uint64_t> s;
  for (const auto& x : v) s.insert(x.index());
  return s;
}

}  // namespace

TEST_CASE("composition examples") {
  const auto& f3 = FieldCtx::get(3, 1);
  const auto A = ints(f3, {1, 2, 1});
  CHECK(A * AdditivePoly::identity(f3) == A);
  CHECK(ints(f3, {1, 1}) * ints(f3, {-1, 1}) == ints(f3, {-1, 0, 1}));

  const auto& f9 = FieldCtx::get(3, 2);
  const auto a = FieldElem::gen(f9);
  const auto F = AdditivePoly::term(FieldElem::one(f9), 1);
  CHECK(F * AdditivePoly::scalar(a) == AdditivePoly::term(a.frob(1), 1));
  CHECK(AdditivePoly::scalar(a) * F == AdditivePoly::term(a, 1));
  CHECK(a.frob(1) != a);
}

TEST_CASE("composition agrees with evaluation") {
  std::mt19937_64 rng(11);
  for (auto [p, m] : std::vector<std::pair<int, int>>{{2, 5}, {3, 3}, {5, 2}, {7, 2}}) {
    const auto& ctx = FieldCtx::get(p, m);
    for (int t = 0; t < 20; ++t) {
      const auto A = random_additive(ctx, rng, t % 3 + 1);
      const auto B = random_additive(ctx, rng, (t + 1) % 3);
      const auto AB = A * B;
      CHECK(AB.deg() == A.deg() + B.deg());
      for (int s = 0; s < 10; ++s) {
        const auto x = FieldElem::random(ctx, rng);
        CHECK(AB.evaluate(x) == A.evaluate(B.evaluate(x)));
      }
      // The plain-polynomial view computes the same map.
      const auto x = FieldElem::random(ctx, rng);
      CHECK(A.to_poly().eval(x) == A.evaluate(x));
      CHECK(AdditivePoly::from_poly(A.to_poly()) == A);
    }
  }
}

TEST_CASE("right division and gcd") {
  const auto& f3 = FieldCtx::get(3, 1);
  const auto A = ints(f3, {1, 2, 1});
  auto [q, r] = ore_right_divmod(A, AdditivePoly::identity(f3));
  CHECK(q == A);
  CHECK(r.is_zero());
  CHECK(ore_right_gcd(ints(f3, {-1, 0, 1}), ints(f3, {-1, 1})) == ints(f3, {-1, 1}));
  CHECK_THROWS_AS(ore_right_divmod(A, AdditivePoly(f3)), Error);

  std::mt19937_64 rng(12);
  const auto& ctx = FieldCtx::get(3, 2);
  for (int t = 0; t < 30; ++t) {
    const auto a = random_additive(ctx, rng, 4);
    const auto b = random_additive(ctx, rng, 2);
    const auto dm = ore_right_divmod(a, b);
    CHECK(dm.q * b + dm.r == a);
    CHECK(dm.r.deg() < b.deg());
    const auto g = ore_right_gcd(a, a);
    CHECK(g == a.monic());
  }
}

TEST_CASE("gcd roots are the common roots") {
  // Build A = X*T and B = Y*T with a known common right factor T and compare
  // root sets exhaustively inside a field where all three split.
  std::mt19937_64 rng(13);
  const auto& base = FieldCtx::get(2, 1);
  for (int t = 0; t < 10; ++t) {
    const auto T = random_additive(base, rng, 1 + t % 2);
    const auto A = random_additive(base, rng, 1) * T;
    const auto B = random_additive(base, rng, 2) * T;
    if (!A.is_separable() || !B.is_separable()) continue;
    const auto G = ore_right_gcd(A, B);
    CHECK(ore_right_divmod(A, G).r.is_zero());
    CHECK(ore_right_divmod(B, G).r.is_zero());
    const auto ra = root_space(A);
    const auto rb = root_space(B);
    const int mm = std::lcm(ra.ctx->m(), rb.ctx->m());
    const auto& big = FieldCtx::get(2, mm);
    std::set<uint64_t> common;
    for (const auto& x : all_elements(big))
      if (embed(A, big).evaluate(x).is_zero() && embed(B, big).evaluate(x).is_zero()) common.insert(x.index());
    CHECK(index_set(span_elements(roots_in(G, big))) == common);
  }
}

TEST_CASE("palindromic examples") {
  const auto& f3 = FieldCtx::get(3, 1);
  const Poly X = Poly::x(f3);
  CHECK(palindromic(X.pow(4)) == ints(f3, {1, 0, 1}));
  CHECK_THROWS_AS(palindromic(X.pow(3)), Error);
  CHECK_THROWS_AS(palindromic(X.pow(5)), Error);
  CHECK_THROWS_AS(palindromic(X.pow(2) * Poly::constant(k(f3, 1))), Error);

  // The constant and linear parts do not matter.
  const auto& f9 = FieldCtx::get(3, 2);
  const auto g = FieldElem::gen(f9);
  const Poly X9 = Poly::x(f9);
  CHECK(palindromic(X9.pow(4) + X9 * g + Poly::constant(g)) == palindromic(X9.pow(4)));
  CHECK(!xs_decompose(X9.pow(3)).has_value());

  std::mt19937_64 rng(14);
  for (int p : {3, 5}) {
    const auto& ctx = FieldCtx::get(p, 4);
    const Poly Xp = Poly::x(ctx);
    const uint64_t p2 = static_cast<uint64_t>(p) * p;
    for (int t = 0; t < 25; ++t) {
      const auto a2 = FieldElem::random(ctx, rng);
      const auto a1p = FieldElem::random(ctx, rng);
      const auto one = FieldElem::one(ctx);
      // f = X^{1+p} + a2 X^2
      auto ad = palindromic(Xp.pow(1 + p) + Poly::monomial(a2, 2));
      CHECK(ad == AdditivePoly(ctx, {one, a2.frob(1).scale(2), one}));
      // f = X^{1+p^2} + a_{1+p} X^{1+p} + a2 X^2
      ad = palindromic(Poly::monomial(one, 1 + p2) + Poly::monomial(a1p, 1 + p) + Poly::monomial(a2, 2));
      CHECK(ad == AdditivePoly(ctx, {one, a1p.frob(1), a2.frob(2).scale(2), a1p.frob(2), one}));
    }
  }
}

TEST_CASE("palindromic is monic of degree 2s") {
  std::mt19937_64 rng(15);
  for (auto [p, m] : std::vector<std::pair<int, int>>{{2, 4}, {3, 2}, {5, 2}}) {
    const auto& ctx = FieldCtx::get(p, m);
    for (int s = 1; s <= 3; ++s) {
      const auto S = random_additive(ctx, rng, s);
      const auto ad = palindromic(xs_poly(S, FieldElem::random(ctx, rng)));
      CHECK(ad.deg() == 2 * s);
      CHECK(ad.leading().is_one());
    }
  }
}

TEST_CASE("palindromic invariant under S -> gamma S") {
  std::mt19937_64 rng(16);
  const auto& f9 = FieldCtx::get(3, 2);
  const auto& ctx = FieldCtx::get(3, 4);
  for (int t = 0; t < 20; ++t) {
    // S1 has F-degrees divisible by d = 2 and gamma lies in F_9 - F_3.
    const auto a0 = FieldElem::random(ctx, rng);
    const auto S1 = AdditivePoly(ctx, {a0, FieldElem::zero(ctx), FieldElem::one(ctx)});
    FieldElem gamma = embed(FieldElem::random(f9, rng), ctx);
    while (gamma.in_prime_field()) gamma = embed(FieldElem::random(f9, rng), ctx);
    const auto S2 = AdditivePoly::scalar(gamma) * S1;
    CHECK(palindromic(xs_poly(S1, FieldElem::zero(ctx))) == palindromic(xs_poly(S2, gamma)));
  }
}

TEST_CASE("root space examples") {
  const auto& f3 = FieldCtx::get(3, 1);
  CHECK_THROWS_AS(root_space(ints(f3, {0, 1})), Error);
  const auto insep = root_space(ints(f3, {0, 1}), 0, true);
  CHECK(insep.basis.empty());
  CHECK(insep.inseparable);

  const auto herm = root_space(ints(f3, {1, 0, 1}));
  CHECK(herm.ctx->m() == 4);
  CHECK(herm.basis.size() == 2);
  // Exhaustive: x^9 = -x has exactly 9 solutions in GF(81).
  int count = 0;
  for (const auto& x : all_elements(*herm.ctx)) count += (x.frob(2) + x).is_zero();
  CHECK(count == 9);
  CHECK(index_set(span_elements(herm.basis)).size() == 9);

  const auto fp = root_space(ints(f3, {-1, 1}));
  CHECK(fp.ctx->m() == 1);
  CHECK(fp.basis.size() == 1);

  CHECK_THROWS_AS(root_space(ints(f3, {1, 0, 1}), 3), Error);
  CHECK_THROWS_AS(root_space(AdditivePoly(f3)), Error);
}

TEST_CASE("root spaces are closed subspaces") {
  std::mt19937_64 rng(17);
  for (auto [p, m] : std::vector<std::pair<int, int>>{{2, 1}, {2, 2}, {3, 1}, {5, 1}}) {
    const auto& ctx = FieldCtx::get(p, m);
    for (int t = 0; t < 5; ++t) {
      const auto A = random_additive(ctx, rng, 2);
      if (!A.is_separable()) continue;
      const auto rs = root_space(A);
      CHECK(static_cast<int>(rs.basis.size()) == A.deg());
      CHECK(fp_rank_of(rs.basis) == rs.basis.size());
      const auto Ab = embed(A, *rs.ctx);
      const auto span = span_elements(rs.basis);
      CHECK(span.size() == static_cast<size_t>(p * p));
      for (const auto& y : span) CHECK(Ab.evaluate(y).is_zero());
    }
  }
}

TEST_CASE("subspace polynomial vanishes exactly on the span") {
  const auto& ctx = FieldCtx::get(3, 3);
  std::mt19937_64 rng(18);
  for (int t = 0; t < 10; ++t) {
    std::vector<FieldElem> basis;
    while (basis.size() < 2) {
      basis.push_back(FieldElem::random(ctx, rng));
      if (fp_rank_of(basis) < basis.size()) basis.pop_back();
    }
    const auto P = subspace_polynomial(basis);
    CHECK(P.deg() == 2);
    CHECK(P.leading().is_one());
    CHECK(index_set(span_elements(roots_in(P, ctx))) == index_set(span_elements(basis)));
  }
  CHECK_THROWS_AS(subspace_polynomial({FieldElem::one(ctx), FieldElem::one(ctx)}), Error);
}

TEST_CASE("translations by Z(Ad_f) fix f up to constants") {
  std::mt19937_64 rng(19);
  for (auto [p, s] : std::vector<std::pair<int, int>>{{2, 1}, {2, 2}, {3, 1}, {3, 2}, {5, 1}}) {
    const auto& base = FieldCtx::get(p, 1);
    for (int t = 0; t < 4; ++t) {
      auto S = random_additive(base, rng, s);
      const auto f = xs_poly(S, FieldElem::random(base, rng));
      const auto ad = palindromic(f);
      const auto rs = root_space(ad);
      CHECK(static_cast<int>(rs.basis.size()) == 2 * s);
      const auto fb = embed(f, *rs.ctx);
      for (const auto& y : span_elements(rs.basis)) CHECK(reduce_mod_wp(delta(fb, y)).degree() <= 0);
      // A translation outside Z(Ad_f) does not.
      for (const auto& y : all_elements(*rs.ctx)) {
        if (embed(ad, *rs.ctx).evaluate(y).is_zero()) continue;
        CHECK(reduce_mod_wp(delta(fb, y)).degree() > 0);
        break;
      }
    }
  }
}
