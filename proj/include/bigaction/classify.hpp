// Copyright 2026 The bigaction Authors
// SPDX-License-Identifier: Apache-2.0

// The catalogue of big actions with elementary abelian G' of order p, p^2 or
// p^3 satisfying |G|/g^2 >= 4/(p^2-1)^2: one constructor and one independent
// verifier per case, plus the arithmetic of the Hermitian, Suzuki and Ree
// curves.

#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bigaction/cover.hpp"

namespace bigaction {

enum class CaseId {
  kP1_v2s,
  kP1_v2s_1,
  kP1_v2s_2,
  kP1_v2s_3,
  kP1_v2s_4,
  kP2T_a1,
  kP2T_a2i,
  kP2T_a2ii,
  kP2T_a3i,
  kP2T_a3ii,
  kP2T_a3iii,
  kP2T_b,
  kP2N_s1,
  kP2N_s2,
  kP2N_s1_p3,
  kP2N_s2_p3,
  kP3T,
  kP3N_l12,
  kP3N_l23_b1nz,
  kP3N_l23_b1z,
  kP3N_both,
};

// "P1.v2s-1", "P2T.a2ii", ... The Unicode minus is accepted on input.
std::string to_string(CaseId id);
CaseId parse_case_id(const std::string& s);
const std::vector<CaseId>& all_case_ids();

// Static facts about a case. Degrees and v are functions of s.
struct CaseInfo {
  CaseId id;
  int n = 0;              // dim G'
  uint32_t min_p = 2;     // smallest prime the construction accepts
  uint32_t max_p = 0;     // 0: unbounded
  int min_s = 1;
  int max_s = 0;          // 0: unbounded
  int default_s = 1;
  bool central = true;    // trivial representation of V on G'
  std::string summary;
};
const CaseInfo& case_info(CaseId id);

std::vector<long> expected_degrees(CaseId id, uint32_t p, int s);
int expected_v(CaseId id, int s);
Int expected_genus(CaseId id, uint32_t p, int s);
// |G|/g and |G|/g^2 in closed form.
Rational expected_ratio_g(CaseId id, uint32_t p, int s);
Rational expected_ratio_g2(CaseId id, uint32_t p, int s);
// Whether g >= 2 and the closed-form ratios clear 2p/(p-1), and 4/(p^2-1)^2 as well.
bool expected_big_action(CaseId id, uint32_t p, int s);
bool expected_star(CaseId id, uint32_t p, int s);

// Free parameters of one table. Every field element lives in ctx. Parameters
// that run over a finite set (roots of a polynomial, points of V) are picked by
// index in `choices`; the index order is the sorted order of the set.
struct CaseParams {
  const FieldCtx* ctx = nullptr;
  int s = 0;  // 0: the case default
  int d = 0;  // subfield degree for gamma parameters; 0: smallest possible
  std::vector<FieldElem> S;  // coefficients of S_1 by power of F, monic
  std::map<std::string, FieldElem> values;
  std::map<std::string, uint64_t> choices;
  // F_p-linear forms on root-space coordinates cutting V out of the full
  // root space. Empty: drop the last basis vectors.
  std::vector<FpVector> constraints;
};

// Builds the spec of a table row from its free parameters. Derived
// coefficients are always recomputed. Throws ConstraintViolated,
// UnsupportedPrime, EmptyParameterSet or SplittingFieldNotFound.
CoverSpec build_case(CaseId id, const CaseParams& params);

struct CaseCheck {
  std::string name;
  bool ok = false;
  std::string expected;
  std::string actual;
};

struct CaseReport {
  CaseId id;
  int s = 0;
  BigActionReport report;
  std::vector<CaseCheck> checks;
  // Set when some printed row could not be checked as written; the instance is
  // then verified through the representation matrices only.
  bool table_unverifiable = false;
  std::vector<std::string> notes;

  bool ok() const;
  std::vector<CaseCheck> mismatches() const;
};

// Re-derives every claim of the table from the spec alone.
CaseReport verify_case(const CoverSpec& spec, CaseId id);

struct Sampling {
  bool exhaustive = false;
  uint64_t seed = 0;
  uint64_t count = 0;
  // Attempts per requested instance before giving up on random sampling.
  uint64_t attempts_per_instance = 40;
};

struct CaseInstance {
  CaseParams params;
  CaseReport report;
};

struct EnumerationResult {
  std::vector<CaseInstance> instances;  // verified ones only
  uint64_t attempts = 0;
  std::map<std::string, uint64_t> failures;  // error kind or check name -> count
  std::map<std::string, std::string> failure_example;  // first message seen per key
};

// Parameters are drawn from GF(p^ext) (the field must contain every subfield
// the case needs). Deterministic given the seed. jobs > 1 builds in parallel;
// the output order does not depend on it.
EnumerationResult enumerate_case(CaseId id, uint32_t p, int ext, const Sampling& sampling, int s = 0,
                                 int jobs = 1);

enum class SpecialFamily { kHermitian, kSuzuki, kRee };
std::string to_string(SpecialFamily f);
SpecialFamily parse_special_family(const std::string& s);

struct SpecialReport {
  SpecialFamily family;
  uint32_t p = 0;
  int s = 0;
  Int q;
  Int q0;  // 0 for the Hermitian family
  Int g;
  Int order_A;
  Int order_S;   // p-Sylow subgroup of A
  Int order_G2;  // its derived subgroup
  Rational ratio_g;
  Rational ratio_g2;
  bool is_big_action = false;
  bool satisfies_star = false;
};

// p is only read for the Hermitian family. Throws InvalidFamilyPrime.
SpecialReport special_curves_report(SpecialFamily family, int s, uint32_t p = 0);

}  // namespace bigaction
