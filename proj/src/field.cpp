// Copyright 2026 The bigaction Authors
// SPDX-License-Identifier: Apache-2.0

#include "bigaction/field.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>

#include "bigaction/error.hpp"

namespace bigaction {

// ---------------------------------------------------------------------------
// F_p scalars and matrices

bool is_prime(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

uint32_t fp_inv(uint32_t a, uint32_t p) {
  int64_t t = 0, nt = 1, r = p, nr = a % p;
  if (nr == 0) fail("DivisionByZero", "inverse of 0 in F_" + std::to_string(p));
  while (nr != 0) {
    int64_t q = r / nr;
    std::tie(t, nt) = std::make_pair(nt, t - q * nt);
    std::tie(r, nr) = std::make_pair(nr, r - q * nr);
  }
  if (t < 0) t += p;
  return static_cast<uint32_t>(t);
}

uint64_t uniform_below(std::mt19937_64& rng, uint64_t n) {
  if (n == 0) return 0;
  const uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  uint64_t v;
  do {
    v = rng();
  } while (v >= limit);
  return v % n;
}

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<size_t> rref(FpMatrix& a) {
  const uint32_t p = a.p;
  std::vector<size_t> pivots;
  size_t row = 0;
  for (size_t col = 0; col < a.cols && row < a.rows; ++col) {
    size_t sel = row;
    while (sel < a.rows && a.at(sel, col) == 0) ++sel;
    if (sel == a.rows) continue;
    if (sel != row)
      for (size_t j = 0; j < a.cols; ++j) std::swap(a.at(sel, j), a.at(row, j));
    const uint64_t inv = fp_inv(a.at(row, col), p);
    for (size_t j = col; j < a.cols; ++j) a.at(row, j) = static_cast<uint32_t>(a.at(row, j) * inv % p);
    for (size_t i = 0; i < a.rows; ++i) {
      if (i == row || a.at(i, col) == 0) continue;
      const uint64_t f = p - a.at(i, col);
      for (size_t j = col; j < a.cols; ++j)
        a.at(i, j) = static_cast<uint32_t>((a.at(i, j) + f * a.at(row, j)) % p);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

std::vector<FpVector> fp_kernel(const FpMatrix& mat) {
  FpMatrix a = mat;
  const auto pivots = rref(a);
  std::vector<bool> is_pivot(a.cols, false);
  for (size_t c : pivots) is_pivot[c] = true;
  std::vector<FpVector> basis;
  for (size_t free = 0; free < a.cols; ++free) {
    if (is_pivot[free]) continue;
    FpVector v(a.cols, 0);
    v[free] = 1;
    for (size_t r = 0; r < pivots.size(); ++r) {
      const uint32_t e = a.at(r, free);
      v[pivots[r]] = e == 0 ? 0 : a.p - e;
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

size_t fp_rank(const FpMatrix& mat) {
  FpMatrix a = mat;
  return rref(a).size();
}

bool fp_solve(const FpMatrix& mat, const FpVector& rhs, FpVector& out) {
  FpMatrix aug(mat.p, mat.rows, mat.cols + 1);
  for (size_t i = 0; i < mat.rows; ++i) {
    for (size_t j = 0; j < mat.cols; ++j) aug.at(i, j) = mat.at(i, j);
    aug.at(i, mat.cols) = rhs[i] % mat.p;
  }
  const auto pivots = rref(aug);
  if (!pivots.empty() && pivots.back() == mat.cols) return false;
  out.assign(mat.cols, 0);
  for (size_t r = 0; r < pivots.size(); ++r) out[pivots[r]] = aug.at(r, mat.cols);
  return true;
}

// ---------------------------------------------------------------------------
// Polynomials over F_p, used only for modulus selection.

namespace {

using FpPoly = std::vector<uint32_t>;

void trim(FpPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

FpPoly fp_mod(FpPoly a, const FpPoly& f, uint32_t p) {
  trim(a);
  const size_t df = f.size() - 1;
  const uint64_t lead_inv = fp_inv(f.back(), p);
  while (a.size() > df) {
    const uint64_t t = a.back() * lead_inv % p;
    const size_t shift = a.size() - 1 - df;
    for (size_t i = 0; i <= df; ++i)
      a[shift + i] = static_cast<uint32_t>((a[shift + i] + (p - t) * f[i]) % p);
    trim(a);
  }
  return a;
}

FpPoly fp_mulmod(const FpPoly& a, const FpPoly& b, const FpPoly& f, uint32_t p) {
  if (a.empty() || b.empty()) return {};
  std::vector<uint64_t> t(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) t[i + j] = (t[i + j] + uint64_t(a[i]) * b[j]) % p;
  }
  FpPoly r(t.begin(), t.end());
  return fp_mod(r, f, p);
}

FpPoly fp_powmod(FpPoly base, uint64_t e, const FpPoly& f, uint32_t p) {
  FpPoly r{1};
  while (e) {
    if (e & 1) r = fp_mulmod(r, base, f, p);
    e >>= 1;
    if (e) base = fp_mulmod(base, base, f, p);
  }
  return r;
}

FpPoly fp_gcd(FpPoly a, FpPoly b, uint32_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    FpPoly r = fp_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

FpPoly sub_x(FpPoly a, uint32_t p) {
  if (a.size() < 2) a.resize(2, 0);
  a[1] = (a[1] + p - 1) % p;
  trim(a);
  return a;
}

// Rabin's test.
bool irreducible(const FpPoly& f, uint32_t p) {
  const int m = static_cast<int>(f.size()) - 1;
  if (m == 1) return true;
  if (f[0] == 0) return false;
  // powers[k] = x^{p^k} mod f
  std::vector<FpPoly> powers(m + 1);
  powers[0] = fp_mod({0, 1}, f, p);
  for (int k = 1; k <= m; ++k) powers[k] = fp_powmod(powers[k - 1], p, f, p);
  if (sub_x(powers[m], p) != FpPoly{}) return false;
  for (int q = 2; q <= m; ++q) {
    if (m % q != 0 || !is_prime(q)) continue;
    const FpPoly g = fp_gcd(f, sub_x(powers[m / q], p), p);
    if (g.size() != 1) return false;
  }
  return true;
}

FpPoly smallest_irreducible(uint32_t p, int m) {
  // Lexicographic order on (c_{m-1}, ..., c_0), i.e. numeric order of the
  // base-p number whose digit i is c_i.
  FpPoly f(m + 1, 0);
  f[m] = 1;
  for (;;) {
    if (irreducible(f, p)) return f;
    int i = 0;
    while (i < m && ++f[i] == p) f[i++] = 0;
    if (i == m) fail("InternalError", "no irreducible polynomial found");
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// Contexts

FieldCtx::FieldCtx(uint32_t p, int m) : p_(p), m_(m) {
  modulus_ = smallest_irreducible(p, m);
  size_ = 1;
  for (int i = 0; i < m; ++i) {
    if (size_ > UINT64_MAX / p) {
      size_ = 0;
      break;
    }
    size_ *= p;
  }
  inv_table_.assign(p, 0);
  for (uint32_t a = 1; a < p; ++a) inv_table_[a] = fp_inv(a, p);

  red_.assign(static_cast<size_t>(std::max(m - 1, 0)) * m, 0);
  {
    // x^m = -sum modulus_i x^i; shift up one step at a time.
    FpPoly cur(m, 0);
    for (int i = 0; i < m; ++i) cur[i] = (p - modulus_[i]) % p;
    for (int j = 0; j + 1 < m; ++j) {
      std::copy(cur.begin(), cur.end(), red_.begin() + j * m);
      const uint64_t top = cur[m - 1];
      for (int i = m - 1; i > 0; --i) cur[i] = cur[i - 1];
      cur[0] = 0;
      for (int i = 0; i < m; ++i) cur[i] = static_cast<uint32_t>((cur[i] + top * ((p - modulus_[i]) % p)) % p);
    }
  }

  frob_.assign(static_cast<size_t>(m) * m, 0);
  root_.assign(static_cast<size_t>(m) * m, 0);
  trace_.assign(m, 0);
  for (int j = 0; j < m; ++j) {
    FieldElem xj = FieldElem::zero(*this);
    xj.c_[j] = 1;
    if (m == 1) xj = FieldElem::one(*this);
    const FieldElem img = xj.pow(p);
    for (int i = 0; i < m; ++i) frob_[i * m + j] = img.c_[i];
  }
  // root_ = frob_^{m-1}
  std::vector<uint32_t> acc(static_cast<size_t>(m) * m, 0);
  for (int i = 0; i < m; ++i) acc[i * m + i] = 1;
  for (int k = 0; k + 1 < m; ++k) {
    std::vector<uint32_t> next(static_cast<size_t>(m) * m, 0);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) {
        uint64_t s = 0;
        for (int l = 0; l < m; ++l) s += uint64_t(frob_[i * m + l]) * acc[l * m + j];
        next[i * m + j] = static_cast<uint32_t>(s % p);
      }
    acc.swap(next);
  }
  root_ = acc;
  for (int j = 0; j < m; ++j) {
    FieldElem xj = FieldElem::zero(*this);
    xj.c_[j] = 1;
    FieldElem t = xj, s = xj;
    for (int k = 1; k < m; ++k) {
      t = t.frob(1);
      s += t;
    }
    trace_[j] = s.c_[0];
  }
}

const FieldCtx& FieldCtx::get(uint32_t p, int m) {
  if (p > kMaxPrime || !is_prime(p))
    fail("InvalidField", "characteristic must be a prime below 2^16, got " + std::to_string(p));
  if (m < 1 || m > kMaxExt)
    fail("InvalidField", "extension degree must lie in [1, 64], got " + std::to_string(m));
  static std::mutex mu;
  static std::map<std::pair<uint32_t, int>, std::unique_ptr<FieldCtx>> registry;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = registry[{p, m}];
  if (!slot) slot.reset(new FieldCtx(p, m));
  return *slot;
}

std::string FieldCtx::name() const {
  return "GF(" + std::to_string(p_) + "^" + std::to_string(m_) + ")";
}

// ---------------------------------------------------------------------------
// Elements

void FieldElem::check_same(const FieldElem& o) const {
  if (ctx_ != o.ctx_) {
    const std::string a = ctx_ ? ctx_->name() : "<none>";
    const std::string b = o.ctx_ ? o.ctx_->name() : "<none>";
    fail("ContextMismatch", "operands live in " + a + " and " + b);
  }
}

FieldElem FieldElem::from_int(const FieldCtx& ctx, int64_t v) {
  FieldElem r(ctx);
  int64_t m = v % static_cast<int64_t>(ctx.p());
  if (m < 0) m += ctx.p();
  r.c_[0] = static_cast<uint16_t>(m);
  return r;
}

FieldElem FieldElem::from_coords(const FieldCtx& ctx, const std::vector<uint32_t>& coords) {
  if (coords.size() > static_cast<size_t>(ctx.m()))
    fail("InvalidElement", "too many coordinates for " + ctx.name());
  FieldElem r(ctx);
  for (size_t i = 0; i < coords.size(); ++i) r.c_[i] = static_cast<uint16_t>(coords[i] % ctx.p());
  return r;
}

FieldElem FieldElem::gen(const FieldCtx& ctx) {
  FieldElem r(ctx);
  if (ctx.m() == 1) {
    r.c_[0] = static_cast<uint16_t>((ctx.p() - ctx.modulus()[0]) % ctx.p());
  } else {
    r.c_[1] = 1;
  }
  return r;
}

FieldElem FieldElem::from_index(const FieldCtx& ctx, uint64_t n) {
  FieldElem r(ctx);
  for (int i = 0; i < ctx.m() && n; ++i) {
    r.c_[i] = static_cast<uint16_t>(n % ctx.p());
    n /= ctx.p();
  }
  return r;
}

FieldElem FieldElem::random(const FieldCtx& ctx, std::mt19937_64& rng) {
  FieldElem r(ctx);
  for (int i = 0; i < ctx.m(); ++i) r.c_[i] = static_cast<uint16_t>(uniform_below(rng, ctx.p()));
  return r;
}

std::vector<uint32_t> FieldElem::coords() const {
  return std::vector<uint32_t>(c_.begin(), c_.begin() + ctx_->m());
}

uint64_t FieldElem::index() const {
  uint64_t n = 0;
  for (int i = ctx_->m() - 1; i >= 0; --i) n = n * ctx_->p() + c_[i];
  return n;
}

bool FieldElem::is_zero() const {
  for (int i = 0; i < ctx_->m(); ++i)
    if (c_[i]) return false;
  return true;
}

bool FieldElem::is_one() const {
  if (c_[0] != 1) return false;
  for (int i = 1; i < ctx_->m(); ++i)
    if (c_[i]) return false;
  return true;
}

bool FieldElem::in_prime_field() const {
  for (int i = 1; i < ctx_->m(); ++i)
    if (c_[i]) return false;
  return true;
}

bool FieldElem::in_subfield(int d) const { return frob(d) == *this; }

FieldElem FieldElem::operator+(const FieldElem& o) const {
  check_same(o);
  FieldElem r(*ctx_);
  const uint32_t p = ctx_->p();
  for (int i = 0; i < ctx_->m(); ++i) {
    uint32_t s = uint32_t(c_[i]) + o.c_[i];
    r.c_[i] = static_cast<uint16_t>(s >= p ? s - p : s);
  }
  return r;
}

FieldElem FieldElem::operator-(const FieldElem& o) const {
  check_same(o);
  FieldElem r(*ctx_);
  const uint32_t p = ctx_->p();
  for (int i = 0; i < ctx_->m(); ++i) {
    uint32_t s = uint32_t(c_[i]) + p - o.c_[i];
    r.c_[i] = static_cast<uint16_t>(s >= p ? s - p : s);
  }
  return r;
}

FieldElem FieldElem::operator-() const {
  FieldElem r(*ctx_);
  const uint32_t p = ctx_->p();
  for (int i = 0; i < ctx_->m(); ++i) r.c_[i] = static_cast<uint16_t>(c_[i] ? p - c_[i] : 0);
  return r;
}

FieldElem FieldElem::scale(uint32_t k) const {
  FieldElem r(*ctx_);
  const uint64_t p = ctx_->p();
  k %= p;
  for (int i = 0; i < ctx_->m(); ++i) r.c_[i] = static_cast<uint16_t>(c_[i] * uint64_t(k) % p);
  return r;
}

FieldElem FieldElem::operator*(const FieldElem& o) const {
  check_same(o);
  const int m = ctx_->m();
  const uint64_t p = ctx_->p();
  FieldElem r(*ctx_);
  if (m == 1) {
    r.c_[0] = static_cast<uint16_t>(uint64_t(c_[0]) * o.c_[0] % p);
    return r;
  }
  uint64_t t[2 * kMaxExt] = {0};
  for (int i = 0; i < m; ++i) {
    if (!c_[i]) continue;
    const uint64_t a = c_[i];
    for (int j = 0; j < m; ++j) t[i + j] += a * o.c_[j];
  }
  uint64_t acc[kMaxExt];
  for (int i = 0; i < m; ++i) acc[i] = t[i] % p;
  const uint32_t* red = ctx_->red_.data();
  for (int j = 0; j + 1 < m; ++j) {
    const uint64_t hi = t[m + j] % p;
    if (!hi) continue;
    const uint32_t* row = red + j * m;
    for (int i = 0; i < m; ++i) acc[i] += hi * row[i];
  }
  for (int i = 0; i < m; ++i) r.c_[i] = static_cast<uint16_t>(acc[i] % p);
  return r;
}

FieldElem FieldElem::inv() const {
  if (is_zero()) fail("DivisionByZero", "inverse of 0 in " + ctx_->name());
  const uint32_t p = ctx_->p();
  const int m = ctx_->m();
  if (m == 1) return from_int(*ctx_, ctx_->inv_fp(c_[0]));
  // Extended Euclid: track s with s*a = r (mod modulus).
  FpPoly r0(ctx_->modulus().begin(), ctx_->modulus().end()), r1(c_.begin(), c_.begin() + m);
  trim(r1);
  FpPoly s0{}, s1{1};
  while (r1.size() > 1) {
    // r0 = q*r1 + rem
    FpPoly rem = r0, q(r0.size(), 0);
    const uint64_t li = ctx_->inv_fp(r1.back());
    while (rem.size() >= r1.size()) {
      const uint64_t t = rem.back() * li % p;
      const size_t sh = rem.size() - r1.size();
      q[sh] = static_cast<uint32_t>(t);
      for (size_t i = 0; i < r1.size(); ++i)
        rem[sh + i] = static_cast<uint32_t>((rem[sh + i] + (p - t) * r1[i]) % p);
      trim(rem);
    }
    trim(q);
    // s2 = s0 - q*s1
    FpPoly s2(std::max(s0.size(), q.size() + s1.size()), 0);
    for (size_t i = 0; i < s0.size(); ++i) s2[i] = s0[i];
    for (size_t i = 0; i < q.size(); ++i)
      for (size_t j = 0; j < s1.size(); ++j)
        s2[i + j] = static_cast<uint32_t>((s2[i + j] + uint64_t(p - q[i]) * s1[j]) % p);
    trim(s2);
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // r1 is a nonzero constant.
  const uint64_t ci = ctx_->inv_fp(r1[0]);
  FieldElem out(*ctx_);
  FpPoly red = fp_mod(s1, ctx_->modulus(), p);
  for (size_t i = 0; i < red.size(); ++i) out.c_[i] = static_cast<uint16_t>(red[i] * ci % p);
  return out;
}

FieldElem FieldElem::operator/(const FieldElem& o) const {
  check_same(o);
  return *this * o.inv();
}

FieldElem FieldElem::pow(uint64_t e) const {
  FieldElem r = one(*ctx_), b = *this;
  while (e) {
    if (e & 1) r = r * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return r;
}

FieldElem FieldElem::apply_matrix(const std::vector<uint32_t>& mat) const {
  const int m = ctx_->m();
  const uint64_t p = ctx_->p();
  FieldElem r(*ctx_);
  for (int i = 0; i < m; ++i) {
    uint64_t s = 0;
    const uint32_t* row = mat.data() + i * m;
    for (int j = 0; j < m; ++j) s += uint64_t(row[j]) * c_[j];
    r.c_[i] = static_cast<uint16_t>(s % p);
  }
  return r;
}

FieldElem FieldElem::frob(int k) const {
  const int m = ctx_->m();
  if (m == 1) return *this;
  k %= m;
  if (k < 0) k += m;
  FieldElem r = *this;
  if (2 * k <= m) {
    for (int i = 0; i < k; ++i) r = r.apply_matrix(ctx_->frob_);
  } else {
    for (int i = 0; i < m - k; ++i) r = r.apply_matrix(ctx_->root_);
  }
  return r;
}

uint32_t FieldElem::trace() const {
  uint64_t s = 0;
  for (int j = 0; j < ctx_->m(); ++j) s += uint64_t(c_[j]) * ctx_->trace_[j];
  return static_cast<uint32_t>(s % ctx_->p());
}

bool FieldElem::operator==(const FieldElem& o) const {
  check_same(o);
  for (int i = 0; i < ctx_->m(); ++i)
    if (c_[i] != o.c_[i]) return false;
  return true;
}

bool FieldElem::operator<(const FieldElem& o) const {
  check_same(o);
  for (int i = 0; i < ctx_->m(); ++i)
    if (c_[i] != o.c_[i]) return c_[i] < o.c_[i];
  return false;
}

size_t FieldElem::hash() const {
  uint64_t h = 1469598103934665603ull ^ reinterpret_cast<uintptr_t>(ctx_);
  for (int i = 0; i < ctx_->m(); ++i) {
    h ^= c_[i];
    h *= 1099511628211ull;
  }
  return static_cast<size_t>(h);
}

std::string FieldElem::str() const {
  std::ostringstream os;
  os << '[';
  for (int i = 0; i < ctx_->m(); ++i) os << (i ? "," : "") << c_[i];
  os << ']';
  return os.str();
}

FieldElem frobenius(const FieldElem& x) { return x.frob(1); }
FieldElem pth_root(const FieldElem& x) { return x.pth_root(); }

FpVector to_vector(const FieldElem& x) { return x.coords(); }

FieldElem from_vector(const FieldCtx& ctx, const FpVector& v) { return FieldElem::from_coords(ctx, v); }

FpMatrix mul_matrix(const FieldElem& a) {
  const FieldCtx& ctx = a.ctx();
  const int m = ctx.m();
  FpMatrix mat(ctx.p(), m, m);
  for (int j = 0; j < m; ++j) {
    std::vector<uint32_t> e(m, 0);
    e[j] = 1;
    const FieldElem img = a * FieldElem::from_coords(ctx, e);
    for (int i = 0; i < m; ++i) mat.at(i, j) = img.coord(i);
  }
  return mat;
}

FpMatrix frob_matrix(const FieldCtx& ctx, int k) {
  const int m = ctx.m();
  FpMatrix mat(ctx.p(), m, m);
  for (int j = 0; j < m; ++j) {
    std::vector<uint32_t> e(m, 0);
    e[j] = 1;
    const FieldElem img = FieldElem::from_coords(ctx, e).frob(k);
    for (int i = 0; i < m; ++i) mat.at(i, j) = img.coord(i);
  }
  return mat;
}

std::vector<FieldElem> all_elements(const FieldCtx& ctx) {
  if (ctx.size() == 0 || ctx.size() > (uint64_t(1) << 24))
    fail("TooLarge", "refusing to enumerate " + ctx.name());
  std::vector<FieldElem> out;
  out.reserve(ctx.size());
  for (uint64_t n = 0; n < ctx.size(); ++n) out.push_back(FieldElem::from_index(ctx, n));
  return out;
}

}  // namespace bigaction
