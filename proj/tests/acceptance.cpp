// Acceptance run: one PASS/FAIL line per criterion, with timings. Exits
// nonzero when a criterion fails that is not on the known-unattainable list.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "bigaction/bounds.hpp"
#include "bigaction/classify.hpp"
#include "bigaction/error.hpp"
#include "bigaction/oracle.hpp"
#include "bigaction/ore.hpp"

using namespace bigaction;

namespace {

struct Outcome {
  bool pass = true;
  int hard = 0;  // failures not on the known-unattainable list
  std::vector<std::string> lines;  // detail, printed indented under the verdict
  // Some requested instance cannot exist; see README.
  bool known_unattainable = false;

  void expect(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      ++hard;
      lines.push_back("mismatch: " + what);
    }
  }
  void note(const std::string& s) { lines.push_back(s); }
};

Int ipow(Int b, int e) {
  Int r = 1;
  while (e-- > 0) r *= b;
  return r;
}

std::string str(const Int& n) { return n.str(); }

FieldElem nonzero(const FieldCtx& ctx, std::mt19937_64& rng) {
  FieldElem x = FieldElem::random(ctx, rng);
  while (x.is_zero()) x = FieldElem::random(ctx, rng);
  return x;
}

Poly mono(const FieldElem& c, size_t e) { return Poly::monomial(c, e); }

// The round-trip sweep feeds both the table check and the bounds check.
struct Sweep {
  CaseId id;
  uint32_t p;
  EnumerationResult res;
};

std::vector<Sweep>& sweep() {
  static std::vector<Sweep> all = [] {
    std::vector<Sweep> out;
    for (CaseId id : all_case_ids()) {
      const uint32_t p = case_info(id).min_p == 2 && case_info(id).max_p != 2 ? 3 : case_info(id).min_p;
      Sampling smp;
      smp.seed = 101;
      smp.count = 10;
      smp.attempts_per_instance = 4;
      out.push_back({id, p, enumerate_case(id, p, 2, smp, 0, 8)});
    }
    return out;
  }();
  return all;
}

Outcome palindromic_rows() {
  Outcome o;
  std::mt19937_64 rng(1);
  for (uint32_t p : {3u, 5u}) {
    const FieldCtx& F = FieldCtx::get(p, 4);
    const FieldElem one = FieldElem::one(F), two = FieldElem::from_int(F, 2);
    for (int t = 0; t < 100; ++t) {
      const FieldElem a2 = FieldElem::random(F, rng), a1p = FieldElem::random(F, rng);
      // s = 1: X^{1+p} + a_2 X^2 -> X^{p^2} + 2 a_2^p X^p + X
      const auto ad1 = palindromic(mono(one, 1 + p) + mono(a2, 2));
      o.expect(ad1.coeffs() == std::vector<FieldElem>{one, two * a2.frob(1), one}, "s=1 row");
      // s = 2: X^{1+p^2} + a_{1+p} X^{1+p} + a_2 X^2
      const auto ad2 = palindromic(mono(one, 1 + p * p) + mono(a1p, 1 + p) + mono(a2, 2));
      o.expect(ad2.coeffs() == std::vector<FieldElem>{one, a1p.frob(1), two * a2.frob(2), a1p.frob(2), one},
               "s=2 row");
    }
  }
  o.note("200 draws per row over GF(3^4) and GF(5^4)");
  return o;
}

Outcome root_space_dims() {
  Outcome o;
  std::mt19937_64 rng(2);
  for (uint32_t p : {2u, 3u, 5u}) {
    const FieldCtx& Fp = FieldCtx::get(p, 1);
    for (int s = 1; s <= 2; ++s) {
      for (int t = 0; t < 20; ++t) {
        // f = X S(X), S = F^s + sum_{i<s} a_i F^i over F_p; at p = 2 the X^2
        // term would not be reduced, so a_0 = 0 there.
        Poly f = mono(FieldElem::one(Fp), 1 + static_cast<size_t>(ipow(p, s)));
        for (int i = p == 2 ? 1 : 0; i < s; ++i)
          f = f + mono(FieldElem::random(Fp, rng), 1 + static_cast<size_t>(ipow(p, i)));
        const auto rs = root_space(palindromic(f));
        o.expect(static_cast<int>(rs.basis.size()) == 2 * s,
                 "p=" + std::to_string(p) + " s=" + std::to_string(s) + " dim " + std::to_string(rs.basis.size()));
      }
    }
  }
  o.note("120 polynomials, dim Z(Ad_f) = 2s throughout");
  return o;
}

Poly random_reduced(const FieldCtx& ctx, std::mt19937_64& rng, size_t max_deg) {
  const uint32_t p = ctx.p();
  size_t d;
  do d = 1 + uniform_below(rng, max_deg); while (d % p == 0);
  std::vector<FieldElem> c(d + 1, FieldElem::zero(ctx));
  for (size_t e = 1; e <= d; ++e)
    if (e % p) c[e] = FieldElem::random(ctx, rng);
  c[d] = nonzero(ctx, rng);
  return Poly(ctx, c);
}

Outcome genus_equivalence() {
  Outcome o;
  std::mt19937_64 rng(3);
  for (uint32_t p : {2u, 3u, 5u}) {
    const FieldCtx& ctx = FieldCtx::get(p, 2);
    int done = 0;
    while (done < 100) {
      const int n = 1 + static_cast<int>(uniform_below(rng, 3));
      std::vector<Poly> fs;
      for (int i = 0; i < n; ++i) fs.push_back(random_reduced(ctx, rng, 1 + 3 * p * p));
      std::vector<Poly> adapted;
      try {
        adapted = adapt_basis(fs);
      } catch (const Error&) {
        continue;
      }
      const CoverSpec spec{&ctx, adapted, {}};
      o.expect(genus(spec) == genus_oracle(spec), "p=" + std::to_string(p));
      ++done;
    }
  }
  o.note("300 adapted specs");
  return o;
}

Outcome hermitian_type() {
  Outcome o;
  Sampling smp;
  smp.seed = 4;
  smp.count = 1;
  const auto res = enumerate_case(CaseId::kP1_v2s, 3, 1, smp, 1);
  if (res.instances.empty()) {
    o.expect(false, "no P1.v2s instance at p=3");
    return o;
  }
  const CoverSpec spec = build_case(CaseId::kP1_v2s, res.instances[0].params);
  const auto r = report(spec, star_threshold(3));
  o.expect(r.g == 3, "g = " + str(r.g));
  o.expect(r.ratio_g2 == 3, "|G|/g^2 = " + to_string(r.ratio_g2));
  o.expect(r.ratio_g2 == Rational(4 * 3, 4), "4p/(p-1)^2");
  const auto grp = AutGroup::of_spec(spec);
  const auto gr = grp.structure_check(Expected::kExtraspecial);
  o.expect(grp.order() == 27, "order " + std::to_string(grp.order()));
  o.expect(gr.ok(), "extraspecial checks");
  o.expect(gr.center_order == 3 && gr.derived_order == 3 && gr.frattini_order == 3 && gr.exponent == 3,
           "center, derived, Frattini, exponent");
  o.note("order 27, g 3, |G|/g^2 3, extraspecial of exponent 3");
  return o;
}

Outcome special_curves() {
  Outcome o;
  const auto su = special_curves_report(SpecialFamily::kSuzuki, 1);
  o.expect(su.g == 14 && su.ratio_g == Rational(32, 7) && su.ratio_g > 4 && !su.satisfies_star, "Suzuki");
  const auto ree = special_curves_report(SpecialFamily::kRee, 1);
  o.expect(ree.g == Int(3) * 3 * 26 * 31 / 2 && ree.g == 3627, "Ree genus");
  o.expect(ree.order_S == 19683 && ree.is_big_action && !ree.satisfies_star, "Ree flags");
  for (uint32_t p : {2u, 3u, 5u, 7u})
    for (int s = 1; s <= 4; ++s)
      o.expect(special_curves_report(SpecialFamily::kHermitian, s, p).satisfies_star == (s <= 3),
               "Hermitian p=" + std::to_string(p) + " s=" + std::to_string(s));
  o.note("Suzuki g 14 ratio 32/7; Ree g 3627 |S| 19683; Hermitian (*) iff s <= 3");
  return o;
}

Outcome p2n_s1() {
  Outcome o;
  const uint32_t p = 5;
  Sampling smp;
  smp.seed = 6;
  smp.count = 50;
  const auto res = enumerate_case(CaseId::kP2N_s1, p, 4, smp, 0, 8);
  o.expect(res.instances.size() == 50, "only " + std::to_string(res.instances.size()) + " instances");
  const Rational want = star_threshold(p) * Rational(p * p * (p + 1) * (p + 1), (1 + 2 * p) * (1 + 2 * p));
  for (const auto& inst : res.instances) {
    const CoverSpec spec = build_case(CaseId::kP2N_s1, inst.params);
    const FieldElem b = embed(inst.params.values.at("b"), *spec.ctx);
    const auto span = span_elements(spec.V);
    o.expect(span.size() == 25, "|V| = " + std::to_string(span.size()));
    for (const auto& y : span) {
      const auto L = try_rep_matrix(spec, y);
      if (!L) {
        o.expect(false, "translation does not lift");
        continue;
      }
      const FieldElem ell = FieldElem::from_int(*spec.ctx, 2) * (b * y.frob(1) - b.frob(1) * y);
      o.expect(ell.in_prime_field() && L->at(0, 1) == ell.coord(0), "ell_12");
    }
    o.expect(report(spec, star_threshold(p)).ratio_g2 == want, "|G|/g^2");
    o.expect(AutGroup::of_spec(spec).order() == 625, "oracle order");
  }
  o.note("50 values of b in GF(5^4), 25 translations each, group order 625");
  return o;
}

Outcome threshold_flips() {
  Outcome o;
  o.expect(expected_star(CaseId::kP3N_l12, 5, 1) && !expected_star(CaseId::kP3N_l12, 3, 1), "P3N.l12");
  o.expect(expected_star(CaseId::kP3N_both, 11, 1) && !expected_star(CaseId::kP3N_both, 7, 1), "P3N.both");
  // The flags come from exact ratios; cross-check against the threshold directly.
  for (auto [id, p] : {std::pair{CaseId::kP3N_l12, 3u}, {CaseId::kP3N_l12, 5u}, {CaseId::kP3N_both, 7u},
                       {CaseId::kP3N_both, 11u}})
    o.expect((expected_ratio_g2(id, p, 1) >= star_threshold(p)) == expected_star(id, p, 1),
             to_string(id) + " p=" + std::to_string(p));
  o.note("P3N.l12 flips between 3 and 5, P3N.both between 7 and 11");
  return o;
}

Outcome bounds() {
  Outcome o;
  for (uint32_t p : {3u, 5u, 7u, 11u})
    o.expect(bound_Gprime(star_threshold(p), p) >= ipow(p, 3), "bound_Gprime p=" + std::to_string(p));

  int checked = 0;
  for (const auto& sw : sweep()) {
    const uint32_t p = sw.p;
    const auto& info = case_info(sw.id);
    for (const auto& inst : sw.res.instances) {
      const auto& r = inst.report.report;
      const std::string tag = to_string(sw.id) + " p=" + std::to_string(p);
      if (r.is_big_action)
        o.expect(Rational(r.g) < bound_genus(p, r.order_V, r.order_G2), tag + " genus bound");
      if (!r.satisfies_star) continue;
      const Rational M = star_threshold(p);
      o.expect(r.order_G2 <= bound_Gprime(M, p), tag + " |G'| bound");
      if (info.central) {
        const CoverSpec spec = build_case(sw.id, inst.params);
        // deg f_1 = 1 + p^{s_1}
        Int q = spec.functions[0].degree() - 1;
        const Rational ps2(q * q);
        const auto tb = bounds_trivial(M, p);
        o.expect(tb.ratio_g2_lower.compare(ps2 / (r.g * r.g)) <= 0, tag + " p^{2s}/g^2");
        o.expect(tb.V_ratio_lower.compare(Rational(r.order_V) / ps2) <= 0 && r.order_V <= q * q, tag + " |V|/p^{2s}");
      } else {
        const auto nt = bounds_nontrivial(M, p);
        o.expect(nt.V.compare(Rational(r.order_V)) >= 0, tag + " |V| bound");
        o.expect(nt.g.compare(Rational(r.g)) > 0, tag + " g bound");
      }
      ++checked;
    }
  }
  o.note(std::to_string(checked) + " enumerated instances satisfying (*) checked against the bounds");

  for (uint32_t p : {3u, 5u}) {
    const Rational want(4 * Int(p), Int(p - 1) * (p - 1));
    const FieldCtx& Fp = FieldCtx::get(p, 1);
    Int last = 0;
    std::ostringstream gs;
    for (int s = 1; s <= 4; ++s) {
      // f = X^{1+p^s}, V = Z(F^{2s} + I), one function
      const Poly f = mono(FieldElem::one(Fp), 1 + static_cast<size_t>(ipow(p, s)));
      const auto rs = root_space(palindromic(f));
      CoverSpec spec = embed(CoverSpec{&Fp, {f}, {}}, *rs.ctx);
      spec.V = rs.basis;
      const auto r = report(spec, star_threshold(p));
      o.expect(r.ratio_g2 == want, "family ratio p=" + std::to_string(p) + " s=" + std::to_string(s));
      o.expect(r.g > last, "family genus grows");
      last = r.g;
      gs << (s > 1 ? "," : "") << r.g;
    }
    o.note("p=" + std::to_string(p) + " family g = " + gs.str() + " at |G|/g^2 = " + to_string(want));
  }
  return o;
}

Outcome structure_claims() {
  Outcome o;
  // Three F_p-independent elements 1, gamma_2, gamma_3 do not fit in F_9.
  {
    CaseParams params;
    params.ctx = &FieldCtx::get(3, 2);
    params.s = 2;
    params.d = 2;
    std::string kind;
    try {
      build_case(CaseId::kP3T, params);
    } catch (const Error& e) {
      kind = e.kind();
    }
    o.pass = false;
    o.known_unattainable = true;
    o.note("P3T p=3 s=2 d=2 cannot be built (" + (kind.empty() ? std::string("no error") : kind) +
           "): 1, gamma_2, gamma_3 would be F_3-independent in F_9");
  }
  {
    Sampling smp;
    smp.seed = 9;
    smp.count = 1;
    const auto res = enumerate_case(CaseId::kP3T, 3, 3, smp, 3);
    if (res.instances.empty()) {
      o.expect(false, "no P3T s=3 instance");
    } else {
      const auto grp = AutGroup::of_spec(build_case(CaseId::kP3T, res.instances[0].params));
      const auto gr = grp.structure_check(Expected::kSpecial);
      const bool ok = grp.order() == 19683 && gr.ok() && gr.center_order == 27 && gr.derived_order == 27;
      o.note(std::string("substitute P3T p=3 s=3 d=3: order ") + std::to_string(grp.order()) +
             ", Z(G) = G' of order " + std::to_string(gr.derived_order) + (ok ? ", special" : ", NOT special"));
      o.expect(ok, "P3T s=3 structure");
    }
  }
  {
    Sampling smp;
    smp.seed = 9;
    smp.count = 1;
    const auto res = enumerate_case(CaseId::kP3N_both, 11, 2, smp);
    if (res.instances.empty()) {
      o.expect(false, "no P3N.both instance at p=11");
    } else {
      const auto grp = AutGroup::of_spec(build_case(CaseId::kP3N_both, res.instances[0].params));
      const auto gr = grp.structure_check(Expected::kCyclicCenter);
      o.note("P3N.both p=11: order " + std::to_string(grp.order()) + ", |Z(G)| = " +
             std::to_string(gr.center_order));
      o.expect(grp.order() == 161051 && gr.center_order == 11 && gr.ok(), "P3N.both center");
    }
  }
  return o;
}

Outcome table_sweep() {
  Outcome o;
  int total = 0;
  for (const auto& sw : sweep()) {
    const std::string tag = to_string(sw.id) + " p=" + std::to_string(sw.p);
    o.expect(sw.res.instances.size() >= 10, tag + ": " + std::to_string(sw.res.instances.size()) + " instances");
    for (const auto& inst : sw.res.instances) {
      const CaseReport again = verify_case(build_case(sw.id, inst.params), sw.id);
      o.expect(inst.report.ok() && again.ok(), tag + " round trip");
      const bool flagged = sw.id == CaseId::kP2T_a2ii || sw.id == CaseId::kP3N_l23_b1nz;
      o.expect(again.table_unverifiable == flagged, tag + " table_unverifiable flag");
      ++total;
    }
  }
  // The s = 3 row of (a)-2-ii, sampled through its one-parameter family.
  Sampling smp;
  smp.seed = 12;
  smp.count = 2;
  smp.attempts_per_instance = 3;
  const auto res = enumerate_case(CaseId::kP2T_a2ii, 3, 2, smp, 3, 8);
  o.expect(res.instances.size() == 2, "a2ii s=3 instances");
  for (const auto& inst : res.instances) o.expect(inst.report.ok() && inst.report.table_unverifiable, "a2ii s=3 flag");
  o.note(std::to_string(total) + " round trips over " + std::to_string(sweep().size()) +
         " cases; a2ii (s=2,3) and l23.b1nz carry table_unverifiable");
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"palindromic rows", palindromic_rows},
      {"root-space dimension", root_space_dims},
      {"genus oracle", genus_equivalence},
      {"hermitian-type group", hermitian_type},
      {"special curves", special_curves},
      {"P2N.s1 at p=5", p2n_s1},
      {"threshold flips", threshold_flips},
      {"bounds", bounds},
      {"structure claims", structure_claims},
      {"table sweep", table_sweep},
  };
  int hard_failures = 0;
  for (size_t i = 0; i < criteria.size(); ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const Error& e) {
      o.expect(false, std::string("error ") + e.kind() + ": " + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("%zu %s: %s%s (%.1fs)\n", i + 1, criteria[i].first, o.pass ? "PASS" : "FAIL",
                !o.pass && o.known_unattainable && !o.hard ? " [known unattainable]" : "", secs);
    size_t shown = 0;
    for (const auto& l : o.lines)
      if (shown++ < 12) std::printf("    %s\n", l.c_str());
    if (o.hard) ++hard_failures;
    std::fflush(stdout);
  }
  return hard_failures ? 1 : 0;
}
