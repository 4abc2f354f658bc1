// Copyright 2026 The bigaction Authors
// SPDX-License-Identifier: Apache-2.0

// Brute-force automorphism groups of W_i^p - W_i = f_i(X). An element acts by
//   X   -> X + y
//   W_i -> sum_j U[j][i] W_j + g_i(X) + c_i
// and is stored with g_i of zero constant term, so it is determined by y and
// the constants c.

#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "bigaction/cover.hpp"

namespace bigaction {

struct AutElem {
  FieldElem y;
  FpMatrix U;
  std::vector<Poly> g;
  std::vector<FieldElem> c;

  bool operator==(const AutElem& o) const;
};

// A spec together with the field in which all automorphism constants live.
class AutContext {
 public:
  // Extends the field by a factor p when some lift needs a constant c with
  // c^p - c outside the image of wp on the original field.
  explicit AutContext(const CoverSpec& spec);

  const CoverSpec& spec() const { return spec_; }
  const FieldCtx& ctx() const { return *spec_.ctx; }
  bool extended() const { return extended_; }

  AutElem identity() const;
  // y must lie in the (possibly extended) spec field. Throws NotExtendable.
  AutElem lift_translation(const FieldElem& y) const;
  // W_i -> W_i + 1.
  AutElem as_shift(int i) const;
  // a after b: (a*b)(W) = a(b(W)).
  AutElem compose(const AutElem& a, const AutElem& b) const;
  AutElem inverse(const AutElem& a) const;
  // Checks wp(sigma(W_i)) = f_i(X + y) identically.
  bool satisfies_equations(const AutElem& a) const;
  // Lifts of the V basis followed by the n shifts.
  std::vector<AutElem> generators() const;

 private:
  CoverSpec spec_;
  bool extended_ = false;
};

struct GroupCheck {
  std::string name;
  bool ok = false;
  std::string detail;
};

struct GroupReport {
  uint64_t order = 0;
  uint64_t derived_order = 0;
  uint64_t center_order = 0;
  uint64_t frattini_order = 0;
  uint64_t exponent = 0;
  std::vector<GroupCheck> checks;

  bool ok() const;
};

enum class Expected { kExtraspecial, kSpecial, kCyclicCenter, kNone };

// Finite group generated inside an AutContext. Elements are numbered 0..order-1
// with 0 the identity; subgroups are sorted lists of element numbers.
class AutGroup {
 public:
  using Subgroup = std::vector<uint32_t>;

  // Cap 0 means p^12. Throws CapExceeded.
  static AutGroup generate(std::shared_ptr<const AutContext> ctx, const std::vector<AutElem>& gens,
                           uint64_t cap = 0);
  // The group generated by ctx.generators().
  static AutGroup of_spec(const CoverSpec& spec, uint64_t cap = 0);

  const AutContext& context() const { return *ctx_; }
  uint64_t order() const { return keys_.size(); }
  const std::vector<uint32_t>& generator_ids() const { return gens_; }

  AutElem element(uint32_t i) const;
  // Throws NotInGroup.
  uint32_t index_of(const AutElem& a) const;
  uint32_t mul(uint32_t a, uint32_t b) const;
  uint32_t inv(uint32_t a) const;
  uint32_t pow(uint32_t a, uint64_t e) const;
  uint32_t commutator(uint32_t a, uint32_t b) const;
  uint64_t element_order(uint32_t a) const;

  Subgroup all() const;
  Subgroup closure(const std::vector<uint32_t>& gens) const;
  // Smallest normal subgroup containing gens.
  Subgroup normal_closure(const std::vector<uint32_t>& gens) const;
  Subgroup derived_subgroup() const;
  Subgroup center() const;
  Subgroup frattini() const;
  // Elements with trivial translation part: the shifts W_i -> W_i + c_i.
  Subgroup as_subgroup() const;
  uint64_t exponent() const;

  GroupReport structure_check(Expected expected) const;

 private:
  struct YEntry {
    FieldElem y;
    FpMatrix U;
    std::vector<Poly> g;
  };

  explicit AutGroup(std::shared_ptr<const AutContext> ctx) : ctx_(std::move(ctx)) {}

  std::string key_of(uint32_t yid, const std::vector<FieldElem>& c) const;
  uint32_t y_id(const FieldElem& y);
  uint32_t y_lookup(const FieldElem& y) const;
  void unpack(uint32_t i, uint32_t& yid, std::vector<FieldElem>& c) const;
  // Composition through the y table; returns the packed key.
  std::string compose_key(uint32_t a, uint32_t b);
  std::string compose_key_const(uint32_t a, uint32_t b) const;
  std::string compose_raw(uint32_t ya, const std::vector<FieldElem>& ca, uint32_t yb,
                          const std::vector<FieldElem>& cb, uint32_t yab) const;
  uint32_t insert(const std::string& key);

  std::shared_ptr<const AutContext> ctx_;
  std::vector<YEntry> ys_;
  std::unordered_map<std::string, uint32_t> y_index_;
  std::vector<std::string> keys_;
  std::unordered_map<std::string, uint32_t> index_;
  std::vector<uint32_t> gens_;
};

std::string to_string(Expected e);

}  // namespace bigaction
