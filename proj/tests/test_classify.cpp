#include <algorithm>
#include <random>

#include "bigaction/classify.hpp"
#include "bigaction/error.hpp"
#include "bigaction/oracle.hpp"
#include "doctest.h"

using namespace bigaction;

namespace {

std::string kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return "";
}

Int ipow(Int b, int e) {
  Int r = 1;
  while (e-- > 0) r *= b;
  return r;
}

// Genus from the degree sequence alone: (p-1)/2 sum p^{i-1} (m_i - 1), m_i ascending.
Int genus_from_degrees(uint32_t p, std::vector<long> m) {
  std::sort(m.begin(), m.end());
  Int sum = 0;
  for (size_t i = 0; i < m.size(); ++i) sum += ipow(p, static_cast<int>(i)) * (m[i] - 1);
  return (p - 1) * sum / 2;
}

uint32_t default_p(CaseId id) { return case_info(id).min_p; }

}  // namespace

TEST_CASE("case ids round-trip through their names") {
  for (CaseId id : all_case_ids()) CHECK(parse_case_id(to_string(id)) == id);
  CHECK(all_case_ids().size() == 21);
  CHECK(parse_case_id("P1.v2s\xE2\x88\x92" "2") == CaseId::kP1_v2s_2);
  CHECK(kind_of([] { parse_case_id("P9.nope"); }) == "UnknownCase");
}

TEST_CASE("closed-form ratios agree with degrees and v") {
  for (CaseId id : all_case_ids()) {
    const auto& info = case_info(id);
    for (uint32_t p : {2u, 3u, 5u, 7u, 11u, 13u}) {
      if (p < info.min_p || (info.max_p && p > info.max_p)) continue;
      for (int s = info.min_s; s <= (info.max_s ? info.max_s : info.min_s + 2); ++s) {
        CAPTURE(to_string(id));
        CAPTURE(p);
        CAPTURE(s);
        const Int g = genus_from_degrees(p, expected_degrees(id, p, s));
        const Int G = ipow(p, info.n + expected_v(id, s));
        CHECK(expected_genus(id, p, s) == g);
        CHECK(expected_ratio_g(id, p, s) == Rational(G, g));
        CHECK(expected_ratio_g2(id, p, s) == Rational(G, g * g));
      }
    }
  }
}

TEST_CASE("printed |G|/g for (b) and the three-function totally central case do not match the genus") {
  // The printed denominators: 1+p for (b), p^s instead of p^{s+2} for the other.
  for (uint32_t p : {3u, 5u}) {
    const int s = 3;
    const Rational printed_b = big_action_threshold(p) * Rational(ipow(p, 1 + s), p + 1);
    CHECK(printed_b != expected_ratio_g(CaseId::kP2T_b, p, s));
    const Rational printed_t = big_action_threshold(p) * Rational(ipow(p, s), 1 + p + p * p);
    CHECK(printed_t != expected_ratio_g(CaseId::kP3T, p, s));
    CHECK(printed_t * p * p == expected_ratio_g(CaseId::kP3T, p, s));
  }
}

TEST_CASE("condition (*) flips at the tabulated primes") {
  CHECK_FALSE(expected_star(CaseId::kP3N_l12, 3, 1));
  CHECK(expected_star(CaseId::kP3N_l12, 5, 1));
  CHECK_FALSE(expected_star(CaseId::kP3N_l23_b1z, 3, 2));
  CHECK(expected_star(CaseId::kP3N_l23_b1z, 5, 2));
  CHECK_FALSE(expected_star(CaseId::kP3N_both, 7, 1));
  CHECK(expected_star(CaseId::kP3N_both, 11, 1));
  CHECK(expected_ratio_g2(CaseId::kP2N_s2_p3, 3, 2) == star_threshold(3) * Rational(48, 49));
  CHECK_FALSE(expected_star(CaseId::kP2N_s2_p3, 3, 2));
  CHECK(expected_big_action(CaseId::kP2N_s2_p3, 3, 2));
  // y^2 + y = x^3 has genus 1, so it is no big action however large |G|/g is.
  CHECK(expected_genus(CaseId::kP1_v2s, 2, 1) == 1);
  CHECK_FALSE(expected_big_action(CaseId::kP1_v2s, 2, 1));
  CHECK(expected_star(CaseId::kP1_v2s, 2, 2));
  // a3i is not a big action at s = 2.
  CHECK(expected_ratio_g(CaseId::kP2T_a3i, 3, 2) == Rational(2 * 9, 8));
  CHECK_FALSE(expected_big_action(CaseId::kP2T_a3i, 3, 2));
}

TEST_CASE("every case builds and re-verifies from random parameters") {
  for (CaseId id : all_case_ids()) {
    std::vector<uint32_t> primes{case_info(id).min_p};
    if (primes[0] == 2 && case_info(id).max_p != 2) primes.push_back(3);
    for (uint32_t p : primes) {
      CAPTURE(to_string(id));
      CAPTURE(p);
      Sampling smp;
      smp.seed = 11;
      smp.count = 10;
      smp.attempts_per_instance = 4;
      const auto res = enumerate_case(id, p, 2, smp, 0, 4);
      REQUIRE(res.instances.size() == 10);
      for (const auto& inst : res.instances) {
        CHECK(inst.report.ok());
        // Rebuilding from the stored parameters gives the same spec and verdict.
        const CoverSpec spec = build_case(id, inst.params);
        const CaseReport again = verify_case(spec, id);
        CHECK(again.ok());
        CHECK(again.report.g == inst.report.report.g);
        CHECK(again.report.ratio_g == expected_ratio_g(id, p, again.s));
        CHECK(again.report.satisfies_star == expected_star(id, p, again.s));
      }
      const bool flagged = id == CaseId::kP2T_a2ii || id == CaseId::kP3N_l23_b1nz;
      CHECK(res.instances.front().report.table_unverifiable == flagged);
    }
  }
}

TEST_CASE("enumeration is deterministic and independent of jobs") {
  Sampling smp;
  smp.seed = 5;
  smp.count = 4;
  const auto a = enumerate_case(CaseId::kP2N_s1, 5, 2, smp, 0, 1);
  const auto b = enumerate_case(CaseId::kP2N_s1, 5, 2, smp, 0, 8);
  REQUIRE(a.instances.size() == b.instances.size());
  for (size_t i = 0; i < a.instances.size(); ++i)
    CHECK(a.instances[i].params.values == b.instances[i].params.values);
}

TEST_CASE("P2N.s1 over every nonzero b in GF(25)") {
  Sampling smp;
  smp.exhaustive = true;
  smp.seed = 1;
  const auto res = enumerate_case(CaseId::kP2N_s1, 5, 2, smp, 0, 4);
  CHECK(res.attempts == 24);
  CHECK(res.instances.size() == 24);
  for (const auto& inst : res.instances) {
    CHECK(inst.report.report.ratio_g2 == expected_ratio_g2(CaseId::kP2N_s1, 5, 1));
    CHECK(inst.report.report.order_G == 625);
  }
}

TEST_CASE("oracle group orders match the tables on small instances") {
  Sampling smp;
  smp.seed = 3;
  smp.count = 1;
  {
    const auto res = enumerate_case(CaseId::kP1_v2s, 3, 1, smp, 1);
    REQUIRE(res.instances.size() == 1);
    const auto spec = build_case(CaseId::kP1_v2s, res.instances[0].params);
    const auto grp = AutGroup::of_spec(spec);
    CHECK(grp.order() == 27);
    CHECK(grp.structure_check(Expected::kExtraspecial).ok());
  }
  {
    const auto res = enumerate_case(CaseId::kP2N_s1, 5, 2, smp);
    REQUIRE(res.instances.size() == 1);
    const auto grp = AutGroup::of_spec(build_case(CaseId::kP2N_s1, res.instances[0].params));
    CHECK(grp.order() == 625);
    CHECK(grp.center().size() == 5);
  }
}

TEST_CASE("constructors reject parameters outside the tables") {
  const FieldCtx& f25 = FieldCtx::get(5, 2);
  const FieldCtx& f9 = FieldCtx::get(3, 2);
  CaseParams params;
  params.ctx = &f9;
  params.values["b"] = FieldElem::one(f9);
  CHECK(kind_of([&] { build_case(CaseId::kP2N_s1, params); }) == "UnsupportedPrime");
  params.ctx = &f25;
  params.values["b"] = FieldElem::zero(f25);
  CHECK(kind_of([&] { build_case(CaseId::kP2N_s1, params); }) == "ConstraintViolated");

  std::mt19937_64 rng(2);
  const FieldCtx& f3_6 = FieldCtx::get(3, 6);
  CaseParams b;
  b.ctx = &f3_6;
  b.s = 3;
  FieldElem alpha = FieldElem::random(f3_6, rng);
  while (alpha.is_zero()) alpha = FieldElem::random(f3_6, rng);
  b.values["alpha2"] = alpha;
  b.values["delta2"] = alpha.frob(2) + FieldElem::one(f3_6);
  CHECK(kind_of([&] { build_case(CaseId::kP2T_b, b); }) == "ConstraintViolated");
}

TEST_CASE("special curves") {
  const auto su = special_curves_report(SpecialFamily::kSuzuki, 1);
  CHECK(su.g == 14);
  CHECK(su.ratio_g == Rational(32, 7));
  CHECK(su.is_big_action);
  CHECK_FALSE(su.satisfies_star);

  const auto ree = special_curves_report(SpecialFamily::kRee, 1);
  CHECK(ree.g == 3627);
  CHECK(ree.order_S == 19683);
  CHECK(ree.is_big_action);
  CHECK_FALSE(ree.satisfies_star);

  for (uint32_t p : {2u, 3u, 5u}) {
    for (int s = 1; s <= 4; ++s) {
      const auto h = special_curves_report(SpecialFamily::kHermitian, s, p);
      const Int q = ipow(p, s);
      CHECK(h.g == q * (q - 1) / 2);
      CHECK(h.order_S == q * q * q);
      CHECK(h.satisfies_star == (s <= 3));
    }
  }
  CHECK(kind_of([] { special_curves_report(SpecialFamily::kHermitian, 1, 4); }) == "InvalidFamilyPrime");
  CHECK(parse_special_family("ree") == SpecialFamily::kRee);
}
