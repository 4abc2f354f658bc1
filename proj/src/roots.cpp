// Copyright 2026 The bigaction Authors
// SPDX-License-Identifier: Apache-2.0

// Root finding for polynomials over GF(q) and the subfield embeddings built
// on it. Equal-degree splitting uses the trace map, which works uniformly in
// every characteristic.

#include <algorithm>
#include <map>
#include <mutex>

#include "bigaction/error.hpp"
#include "bigaction/field.hpp"

namespace bigaction {

namespace {

using GPoly = std::vector<FieldElem>;

void trim(GPoly& a) {
  while (!a.empty() && a.back().is_zero()) a.pop_back();
}

GPoly poly_mod(GPoly a, const GPoly& f) {
  trim(a);
  const size_t df = f.size() - 1;
  const FieldElem li = f.back().inv();
  while (a.size() > df) {
    const FieldElem t = a.back() * li;
    const size_t sh = a.size() - 1 - df;
    for (size_t i = 0; i <= df; ++i) a[sh + i] -= t * f[i];
    trim(a);
  }
  return a;
}

GPoly poly_mulmod(const GPoly& a, const GPoly& b, const GPoly& f) {
  if (a.empty() || b.empty()) return {};
  GPoly t(a.size() + b.size() - 1, FieldElem::zero(a[0].ctx()));
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (size_t j = 0; j < b.size(); ++j) t[i + j] += a[i] * b[j];
  }
  return poly_mod(std::move(t), f);
}

GPoly poly_powmod(GPoly base, uint64_t e, const GPoly& f) {
  GPoly r{FieldElem::one(f[0].ctx())};
  r = poly_mod(r, f);
  while (e) {
    if (e & 1) r = poly_mulmod(r, base, f);
    e >>= 1;
    if (e) base = poly_mulmod(base, base, f);
  }
  return r;
}

GPoly monic(GPoly a) {
  trim(a);
  if (a.empty()) return a;
  const FieldElem li = a.back().inv();
  for (auto& c : a) c *= li;
  return a;
}

GPoly poly_gcd(GPoly a, GPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    GPoly r = poly_mod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

GPoly poly_sub(GPoly a, const GPoly& b) {
  if (b.empty()) {
    trim(a);
    return a;
  }
  if (a.size() < b.size()) a.resize(b.size(), FieldElem::zero(b[0].ctx()));
  for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

GPoly poly_add(GPoly a, const GPoly& b) {
  if (b.empty()) {
    trim(a);
    return a;
  }
  if (a.size() < b.size()) a.resize(b.size(), FieldElem::zero(b[0].ctx()));
  for (size_t i = 0; i < b.size(); ++i) a[i] += b[i];
  trim(a);
  return a;
}

GPoly poly_div(GPoly a, const GPoly& b) {
  trim(a);
  const FieldCtx& ctx = b[0].ctx();
  const size_t db = b.size() - 1;
  if (a.size() <= db) return {};
  GPoly q(a.size() - db, FieldElem::zero(ctx));
  const FieldElem li = b.back().inv();
  while (a.size() > db) {
    const FieldElem t = a.back() * li;
    const size_t sh = a.size() - 1 - db;
    q[sh] = t;
    for (size_t i = 0; i <= db; ++i) a[sh + i] -= t * b[i];
    a.pop_back();
    trim(a);
  }
  return q;
}

// h^p mod f, coefficient p-th powers are not used: this is the ring power.
GPoly pow_p(const GPoly& h, const GPoly& f) {
  if (h.empty()) return h;
  return poly_powmod(h, h[0].ctx().p(), f);
}

void split(const GPoly& g, std::mt19937_64& rng, std::vector<FieldElem>& out) {
  const FieldCtx& ctx = g[0].ctx();
  if (g.size() == 2) {
    out.push_back(-g[0] / g[1]);
    return;
  }
  const uint32_t p = ctx.p();
  for (;;) {
    const FieldElem delta = FieldElem::random(ctx, rng);
    if (delta.is_zero()) continue;
    // T = Tr(delta X) mod g takes F_p values on the roots of g.
    GPoly term = poly_mod({FieldElem::zero(ctx), delta}, g);
    GPoly tr = term;
    for (int i = 1; i < ctx.m(); ++i) {
      term = pow_p(term, g);
      tr = poly_add(tr, term);
    }
    GPoly u;
    if (p == 2) {
      u = tr;
    } else {
      // Shift by a random c: roots r and -r give opposite traces, which a
      // bare quadratic character cannot separate.
      const FieldElem c = FieldElem::from_int(ctx, static_cast<int64_t>(uniform_below(rng, p)));
      u = poly_add(tr, {c});
      u = u.empty() ? u : poly_powmod(u, (p - 1) / 2, g);
      u = poly_sub(u, {FieldElem::one(ctx)});
    }
    GPoly d = poly_gcd(g, u);
    if (d.size() <= 1 || d.size() == g.size()) continue;
    split(d, rng, out);
    split(monic(poly_div(g, d)), rng, out);
    return;
  }
}

}  // namespace

std::vector<FieldElem> field_roots(const std::vector<FieldElem>& coeffs) {
  GPoly f = monic(coeffs);
  if (f.empty()) fail("InvalidArgument", "roots of the zero polynomial");
  if (f.size() == 1) return {};
  const FieldCtx& ctx = f[0].ctx();
  // g = gcd(f, X^q - X)
  GPoly xq = poly_mod({FieldElem::zero(ctx), FieldElem::one(ctx)}, f);
  const GPoly x = xq;
  for (int i = 0; i < ctx.m(); ++i) xq = pow_p(xq, f);
  const GPoly g = poly_gcd(f, poly_sub(xq, x));
  std::vector<FieldElem> out;
  if (g.size() <= 1) return out;
  std::mt19937_64 rng(0x5eed0f5u);
  split(g, rng, out);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

struct EmbedData {
  std::vector<FieldElem> powers;  // images of x^0 .. x^{m-1}
};

const EmbedData& embed_data(const FieldCtx& small, const FieldCtx& big) {
  static std::mutex mu;
  static std::map<std::pair<const FieldCtx*, const FieldCtx*>, EmbedData> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find({&small, &big});
    if (it != cache.end()) return it->second;
  }
  FieldElem beta = FieldElem::one(big);
  if (small.m() > 1) {
    std::vector<FieldElem> mod;
    for (uint32_t c : small.modulus()) mod.push_back(FieldElem::from_int(big, c));
    const auto roots = field_roots(mod);
    if (roots.empty()) fail("InternalError", "modulus of " + small.name() + " has no root in " + big.name());
    beta = roots.front();
  }
  EmbedData d;
  FieldElem pw = FieldElem::one(big);
  for (int i = 0; i < small.m(); ++i) {
    d.powers.push_back(pw);
    pw *= beta;
  }
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(std::make_pair(&small, &big), std::move(d)).first->second;
}

}  // namespace

FieldElem embed(const FieldElem& x, const FieldCtx& big) {
  const FieldCtx& small = x.ctx();
  if (&small == &big) return x;
  if (small.p() != big.p() || big.m() % small.m() != 0)
    fail("ContextMismatch", "cannot embed " + small.name() + " into " + big.name());
  const EmbedData& d = embed_data(small, big);
  FieldElem r = FieldElem::zero(big);
  for (int i = 0; i < small.m(); ++i)
    if (x.coord(i)) r += d.powers[i].scale(x.coord(i));
  return r;
}

}  // namespace bigaction
