// Copyright 2026 The bigaction Authors
// SPDX-License-Identifier: Apache-2.0

#include "bigaction/oracle.hpp"

#include <algorithm>
#include <deque>

#include "bigaction/error.hpp"

namespace bigaction {

namespace {

FpMatrix identity_matrix(uint32_t p, size_t n) {
  FpMatrix m(p, n, n);
  for (size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

FpMatrix matmul(const FpMatrix& a, const FpMatrix& b) {
  FpMatrix r(a.p, a.rows, b.cols);
  for (size_t i = 0; i < a.rows; ++i)
    for (size_t l = 0; l < a.cols; ++l) {
      const uint64_t x = a.at(i, l);
      if (!x) continue;
      for (size_t j = 0; j < b.cols; ++j) r.at(i, j) = static_cast<uint32_t>((r.at(i, j) + x * b.at(l, j)) % a.p);
    }
  return r;
}

// Inverse of a unipotent upper-triangular matrix by back substitution.
FpMatrix unipotent_inverse(const FpMatrix& u) {
  const size_t n = u.rows;
  const uint32_t p = u.p;
  FpMatrix r = identity_matrix(p, n);
  for (size_t col = 0; col < n; ++col)
    for (size_t i = col; i-- > 0;) {
      uint64_t s = 0;
      for (size_t l = i + 1; l <= col; ++l) s += static_cast<uint64_t>(u.at(i, l)) * r.at(l, col);
      r.at(i, col) = static_cast<uint32_t>((p - s % p) % p);
    }
  return r;
}

struct LiftParts {
  FpMatrix U;
  std::vector<Poly> g;
  std::vector<FieldElem> rest;
};

// The translation part of a lift: U from the representation matrix and the
// corrections g_i, plus the constants rest_i that c_i^p - c_i must equal.
LiftParts lift_parts(const CoverSpec& spec, const FieldElem& y) {
  const RepMatrix L = rep_matrix(spec, y);
  LiftParts out{L.matrix(spec.p()), {}, {}};
  for (int i = 0; i < spec.n(); ++i) {
    Poly h = delta(spec.functions[i], y);
    for (int j = 0; j < i; ++j)
      if (L.at(j, i)) h -= spec.functions[j].scale(L.at(j, i));
    const WpSplit split = wp_preimage_mod_const(h);
    out.g.push_back(split.g);
    out.rest.push_back(split.rest);
  }
  return out;
}

std::string coord_bytes(const FieldElem& x) {
  const int m = x.ctx().m();
  std::string s(2 * m, '\0');
  for (int i = 0; i < m; ++i) {
    const uint32_t c = x.coord(i);
    s[2 * i] = static_cast<char>(c & 0xff);
    s[2 * i + 1] = static_cast<char>(c >> 8);
  }
  return s;
}

FieldElem from_bytes(const FieldCtx& ctx, const std::string& s, size_t off) {
  std::vector<uint32_t> c(ctx.m());
  for (int i = 0; i < ctx.m(); ++i)
    c[i] = static_cast<uint8_t>(s[off + 2 * i]) | (static_cast<uint32_t>(static_cast<uint8_t>(s[off + 2 * i + 1])) << 8);
  return FieldElem::from_coords(ctx, c);
}

}  // namespace

bool AutElem::operator==(const AutElem& o) const {
  if (y != o.y || U.a != o.U.a || c.size() != o.c.size()) return false;
  for (size_t i = 0; i < c.size(); ++i)
    if (c[i] != o.c[i] || g[i] != o.g[i]) return false;
  return true;
}

AutContext::AutContext(const CoverSpec& spec) : spec_(spec) {
  validate(spec_);
  for (const auto& y : spec_.V) {
    for (const auto& r : lift_parts(spec_, y).rest)
      if (r.trace() != 0) extended_ = true;
  }
  if (extended_) {
    const int m = spec_.ctx->m() * static_cast<int>(spec_.p());
    if (m > kMaxExt) fail("SplittingFieldNotFound", "automorphism constants need GF(p^" + std::to_string(m) + ")");
    spec_ = embed(spec_, FieldCtx::get(spec_.p(), m));
  }
}

AutElem AutContext::identity() const {
  const size_t n = spec_.functions.size();
  return AutElem{FieldElem::zero(ctx()), identity_matrix(spec_.p(), n), std::vector<Poly>(n, Poly(ctx())),
                 std::vector<FieldElem>(n, FieldElem::zero(ctx()))};
}

AutElem AutContext::lift_translation(const FieldElem& y) const {
  LiftParts parts = lift_parts(spec_, y);
  AutElem a{y, std::move(parts.U), std::move(parts.g), {}};
  for (const auto& r : parts.rest) {
    const auto c = solve_wp_constant(r);
    if (!c) fail("NotExtendable", "constant of the lift of " + y.str() + " needs a larger field");
    a.c.push_back(*c);
  }
  return a;
}

AutElem AutContext::as_shift(int i) const {
  AutElem a = identity();
  a.c.at(i) = FieldElem::one(ctx());
  return a;
}

AutElem AutContext::compose(const AutElem& a, const AutElem& b) const {
  const size_t n = a.c.size();
  AutElem r{a.y + b.y, matmul(a.U, b.U), {}, {}};
  for (size_t i = 0; i < n; ++i) {
    // a(b(W_i)) = sum_j Ub[j][i] a(W_j) + g^b_i(X + y_a) + c^b_i
    Poly t = translate(b.g[i], a.y) + Poly::constant(b.c[i]);
    for (size_t j = 0; j < n; ++j) {
      const uint32_t u = b.U.at(j, i);
      if (u) t += (a.g[j] + Poly::constant(a.c[j])).scale(u);
    }
    r.c.push_back(t.coeff(0));
    r.g.push_back(t.without_constant());
  }
  return r;
}

AutElem AutContext::inverse(const AutElem& a) const {
  const size_t n = a.c.size();
  AutElem r{-a.y, unipotent_inverse(a.U), {}, {}};
  // Solve sum_j U[j][i] t_j = -(g_i(X - y) + c_i) by forward substitution.
  std::vector<Poly> t;
  for (size_t i = 0; i < n; ++i) {
    Poly rhs = -(translate(a.g[i], -a.y) + Poly::constant(a.c[i]));
    for (size_t j = 0; j < i; ++j)
      if (a.U.at(j, i)) rhs -= t[j].scale(a.U.at(j, i));
    t.push_back(rhs);
  }
  for (const auto& ti : t) {
    r.c.push_back(ti.coeff(0));
    r.g.push_back(ti.without_constant());
  }
  return r;
}

bool AutContext::satisfies_equations(const AutElem& a) const {
  const size_t n = spec_.functions.size();
  if (a.U.rows != n || a.U.cols != n) return false;
  for (size_t i = 0; i < n; ++i) {
    if (a.U.at(i, i) != 1) return false;
    for (size_t j = i + 1; j < n; ++j)
      if (a.U.at(j, i)) return false;
  }
  for (size_t i = 0; i < n; ++i) {
    Poly rhs = wp(a.g[i]) + Poly::constant(a.c[i].frob(1) - a.c[i]);
    for (size_t j = 0; j < n; ++j)
      if (a.U.at(j, i)) rhs += spec_.functions[j].scale(a.U.at(j, i));
    if (rhs != translate(spec_.functions[i], a.y)) return false;
  }
  return true;
}

std::vector<AutElem> AutContext::generators() const {
  std::vector<AutElem> out;
  for (const auto& y : spec_.V) out.push_back(lift_translation(y));
  for (int i = 0; i < spec_.n(); ++i) out.push_back(as_shift(i));
  return out;
}

bool GroupReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const GroupCheck& c) { return c.ok; });
}

std::string to_string(Expected e) {
  switch (e) {
    case Expected::kExtraspecial: return "extraspecial";
    case Expected::kSpecial: return "special";
    case Expected::kCyclicCenter: return "cyclic_center";
    case Expected::kNone: return "none";
  }
  return "none";
}

std::string AutGroup::key_of(uint32_t yid, const std::vector<FieldElem>& c) const {
  std::string k(4, '\0');
  for (int b = 0; b < 4; ++b) k[b] = static_cast<char>((yid >> (8 * b)) & 0xff);
  for (const auto& x : c) k += coord_bytes(x);
  return k;
}

uint32_t AutGroup::y_lookup(const FieldElem& y) const {
  const auto it = y_index_.find(coord_bytes(y));
  if (it == y_index_.end()) fail("NotInGroup", "translation " + y.str() + " is not in the group");
  return it->second;
}

uint32_t AutGroup::y_id(const FieldElem& y) {
  const std::string k = coord_bytes(y);
  const auto it = y_index_.find(k);
  if (it != y_index_.end()) return it->second;
  LiftParts parts = lift_parts(ctx_->spec(), y);
  ys_.push_back(YEntry{y, std::move(parts.U), std::move(parts.g)});
  const uint32_t id = static_cast<uint32_t>(ys_.size() - 1);
  y_index_.emplace(k, id);
  return id;
}

void AutGroup::unpack(uint32_t i, uint32_t& yid, std::vector<FieldElem>& c) const {
  const std::string& k = keys_.at(i);
  yid = 0;
  for (int b = 0; b < 4; ++b) yid |= static_cast<uint32_t>(static_cast<uint8_t>(k[b])) << (8 * b);
  const FieldCtx& ctx = ctx_->ctx();
  const size_t n = ctx_->spec().functions.size();
  c.clear();
  for (size_t j = 0; j < n; ++j) c.push_back(from_bytes(ctx, k, 4 + 2 * ctx.m() * j));
}

std::string AutGroup::compose_raw(uint32_t ya, const std::vector<FieldElem>& ca, uint32_t yb,
                                  const std::vector<FieldElem>& cb, uint32_t yab) const {
  const YEntry& B = ys_[yb];
  const FieldElem& y = ys_[ya].y;
  const size_t n = ca.size();
  std::vector<FieldElem> c;
  c.reserve(n);
  for (size_t i = 0; i < n; ++i) {
    FieldElem x = B.g[i].eval(y) + cb[i];
    for (size_t j = 0; j < n; ++j)
      if (B.U.at(j, i)) x += ca[j].scale(B.U.at(j, i));
    c.push_back(x);
  }
  return key_of(yab, c);
}

std::string AutGroup::compose_key(uint32_t a, uint32_t b) {
  uint32_t ya, yb;
  std::vector<FieldElem> ca, cb;
  unpack(a, ya, ca);
  unpack(b, yb, cb);
  const uint32_t yab = y_id(ys_[ya].y + ys_[yb].y);
  return compose_raw(ya, ca, yb, cb, yab);
}

std::string AutGroup::compose_key_const(uint32_t a, uint32_t b) const {
  uint32_t ya, yb;
  std::vector<FieldElem> ca, cb;
  unpack(a, ya, ca);
  unpack(b, yb, cb);
  return compose_raw(ya, ca, yb, cb, y_lookup(ys_[ya].y + ys_[yb].y));
}

uint32_t AutGroup::insert(const std::string& key) {
  const auto it = index_.find(key);
  if (it != index_.end()) return it->second;
  const uint32_t id = static_cast<uint32_t>(keys_.size());
  keys_.push_back(key);
  index_.emplace(key, id);
  return id;
}

AutGroup AutGroup::generate(std::shared_ptr<const AutContext> ctx, const std::vector<AutElem>& gens, uint64_t cap) {
  const uint32_t p = ctx->spec().p();
  if (cap == 0) {
    cap = 1;
    for (int i = 0; i < 12 && cap < (uint64_t{1} << 32); ++i) cap *= p;
  }
  cap = std::min<uint64_t>(cap, UINT32_MAX);
  AutGroup G(ctx);
  const AutElem id = ctx->identity();
  G.insert(G.key_of(G.y_id(id.y), id.c));
  for (const auto& a : gens) {
    if (!ctx->satisfies_equations(a)) fail("InvalidArgument", "generator does not preserve the equations");
    const uint32_t yid = G.y_id(a.y);
    // Generators must agree with the canonical translation part.
    if (G.ys_[yid].U.a != a.U.a) fail("InvalidArgument", "generator has a noncanonical matrix part");
    for (size_t i = 0; i < a.g.size(); ++i)
      if (G.ys_[yid].g[i] != a.g[i]) fail("InvalidArgument", "generator has a noncanonical correction");
    G.gens_.push_back(G.insert(G.key_of(yid, a.c)));
  }
  for (size_t head = 0; head < G.keys_.size(); ++head) {
    for (uint32_t s : G.gens_) {
      G.insert(G.compose_key(static_cast<uint32_t>(head), s));
      if (G.keys_.size() > cap) fail("CapExceeded", "group order exceeds " + std::to_string(cap));
    }
  }
  return G;
}

AutGroup AutGroup::of_spec(const CoverSpec& spec, uint64_t cap) {
  auto ctx = std::make_shared<const AutContext>(spec);
  return generate(ctx, ctx->generators(), cap);
}

AutElem AutGroup::element(uint32_t i) const {
  uint32_t yid;
  std::vector<FieldElem> c;
  unpack(i, yid, c);
  const YEntry& Y = ys_[yid];
  return AutElem{Y.y, Y.U, Y.g, c};
}

uint32_t AutGroup::index_of(const AutElem& a) const {
  const auto it = index_.find(key_of(y_lookup(a.y), a.c));
  if (it == index_.end()) fail("NotInGroup", "element is not in the group");
  return it->second;
}

uint32_t AutGroup::mul(uint32_t a, uint32_t b) const {
  const auto it = index_.find(compose_key_const(a, b));
  if (it == index_.end()) fail("NotInGroup", "product left the group");
  return it->second;
}

uint32_t AutGroup::inv(uint32_t a) const { return index_of(ctx_->inverse(element(a))); }

uint32_t AutGroup::pow(uint32_t a, uint64_t e) const {
  uint32_t r = 0, base = a;
  for (; e; e >>= 1) {
    if (e & 1) r = mul(r, base);
    base = mul(base, base);
  }
  return r;
}

uint32_t AutGroup::commutator(uint32_t a, uint32_t b) const { return mul(mul(a, b), mul(inv(a), inv(b))); }

uint64_t AutGroup::element_order(uint32_t a) const {
  uint64_t k = 1;
  for (uint32_t x = a; x != 0; x = mul(x, a)) ++k;
  return k;
}

AutGroup::Subgroup AutGroup::all() const {
  Subgroup s(keys_.size());
  for (uint32_t i = 0; i < s.size(); ++i) s[i] = i;
  return s;
}

AutGroup::Subgroup AutGroup::closure(const std::vector<uint32_t>& gens) const {
  std::vector<uint32_t> elems{0};
  std::vector<char> seen(keys_.size(), 0);
  seen[0] = 1;
  for (size_t head = 0; head < elems.size(); ++head)
    for (uint32_t s : gens) {
      const uint32_t x = mul(elems[head], s);
      if (!seen[x]) {
        seen[x] = 1;
        elems.push_back(x);
      }
    }
  std::sort(elems.begin(), elems.end());
  return elems;
}

AutGroup::Subgroup AutGroup::normal_closure(const std::vector<uint32_t>& gens) const {
  std::vector<uint32_t> ngens = gens;
  Subgroup H = closure(ngens);
  std::vector<uint32_t> ginv;
  for (uint32_t s : gens_) ginv.push_back(inv(s));
  for (bool grew = true; grew;) {
    grew = false;
    for (size_t k = 0; k < ngens.size() && !grew; ++k)
      for (size_t t = 0; t < gens_.size(); ++t) {
        const uint32_t conj = mul(mul(gens_[t], ngens[k]), ginv[t]);
        if (!std::binary_search(H.begin(), H.end(), conj)) {
          ngens.push_back(conj);
          H = closure(ngens);
          grew = true;
          break;
        }
      }
  }
  return H;
}

AutGroup::Subgroup AutGroup::derived_subgroup() const {
  std::vector<uint32_t> comms;
  for (size_t a = 0; a < gens_.size(); ++a)
    for (size_t b = a + 1; b < gens_.size(); ++b) comms.push_back(commutator(gens_[a], gens_[b]));
  return normal_closure(comms);
}

AutGroup::Subgroup AutGroup::center() const {
  Subgroup z;
  for (uint32_t a = 0; a < keys_.size(); ++a) {
    bool central = true;
    for (uint32_t s : gens_)
      if (mul(a, s) != mul(s, a)) {
        central = false;
        break;
      }
    if (central) z.push_back(a);
  }
  return z;
}

AutGroup::Subgroup AutGroup::frattini() const {
  const uint32_t p = ctx_->spec().p();
  Subgroup H = derived_subgroup();
  std::vector<uint32_t> gens(H.begin(), H.end());
  for (uint32_t a = 0; a < keys_.size(); ++a) {
    const uint32_t x = pow(a, p);
    if (!std::binary_search(H.begin(), H.end(), x)) {
      gens.push_back(x);
      H = closure(gens);
      gens.assign(H.begin(), H.end());
    }
  }
  return H;
}

AutGroup::Subgroup AutGroup::as_subgroup() const {
  const uint32_t zero = y_lookup(FieldElem::zero(ctx_->ctx()));
  Subgroup s;
  uint32_t yid;
  std::vector<FieldElem> c;
  for (uint32_t a = 0; a < keys_.size(); ++a) {
    unpack(a, yid, c);
    if (yid == zero) s.push_back(a);
  }
  return s;
}

uint64_t AutGroup::exponent() const {
  uint64_t e = 1;
  for (uint32_t a = 0; a < keys_.size(); ++a) e = std::max(e, element_order(a));
  return e;
}

GroupReport AutGroup::structure_check(Expected expected) const {
  const CoverSpec& spec = ctx_->spec();
  const uint32_t p = spec.p();
  const Subgroup D = derived_subgroup(), Z = center(), F = frattini(), A = as_subgroup();
  GroupReport r;
  r.order = order();
  r.derived_order = D.size();
  r.center_order = Z.size();
  r.frattini_order = F.size();
  r.exponent = exponent();
  auto add = [&r](std::string name, bool ok, std::string detail) { r.checks.push_back({std::move(name), ok, std::move(detail)}); };
  auto subset = [](const Subgroup& a, const Subgroup& b) { return std::includes(b.begin(), b.end(), a.begin(), a.end()); };

  uint64_t expected_order = 1;
  for (int i = 0; i < spec.n() + spec.v(); ++i) expected_order *= p;
  add("order", r.order == expected_order,
      std::to_string(r.order) + " vs p^(n+v) = " + std::to_string(expected_order));
  add("derived_equals_frattini", D == F, std::to_string(D.size()) + " vs " + std::to_string(F.size()));
  add("derived_equals_shifts", D == A, std::to_string(D.size()) + " vs " + std::to_string(A.size()));
  bool quotient_elementary = true;
  for (uint32_t a = 0; a < order() && quotient_elementary; ++a)
    quotient_elementary = std::binary_search(D.begin(), D.end(), pow(a, p));
  add("quotient_elementary_abelian", quotient_elementary && r.order == r.derived_order * [&] {
        uint64_t q = 1;
        for (int i = 0; i < spec.v(); ++i) q *= p;
        return q;
      }(),
      "G/G' of order " + std::to_string(r.order / std::max<uint64_t>(r.derived_order, 1)));
  const bool central = is_central_rep(spec);
  add("central_rep_iff_shifts_central", central == subset(A, Z),
      std::string("rep ") + (central ? "trivial" : "nontrivial") + ", shifts " + (subset(A, Z) ? "" : "not ") +
          "central");

  switch (expected) {
    case Expected::kExtraspecial: {
      add("center_equals_derived", Z == D, std::to_string(Z.size()) + " vs " + std::to_string(D.size()));
      add("center_order_p", Z.size() == p, std::to_string(Z.size()));
      const uint64_t want = p == 2 ? 4 : p;
      add("exponent", r.exponent == want, std::to_string(r.exponent) + " vs " + std::to_string(want));
      break;
    }
    case Expected::kSpecial: {
      add("center_equals_derived", Z == D, std::to_string(Z.size()) + " vs " + std::to_string(D.size()));
      add("center_equals_frattini", Z == F, std::to_string(Z.size()) + " vs " + std::to_string(F.size()));
      bool elementary = true;
      for (uint32_t z : Z) elementary = elementary && pow(z, p) == 0;
      add("center_elementary_abelian", elementary, "");
      break;
    }
    case Expected::kCyclicCenter:
      add("center_order_p", Z.size() == p, std::to_string(Z.size()));
      break;
    case Expected::kNone:
      break;
  }
  return r;
}

}  // namespace bigaction
