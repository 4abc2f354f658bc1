// Copyright 2026 The bigaction Authors
// SPDX-License-Identifier: Apache-2.0

// Finite fields GF(p^m) in the polynomial basis 1, x, ..., x^{m-1}.
//
// Contexts are interned: FieldCtx::get(p, m) always returns the same object,
// so elements compare contexts by pointer. Contexts live for the lifetime of
// the process.

#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace bigaction {

constexpr int kMaxExt = 64;
constexpr uint32_t kMaxPrime = 65535;

// Small dense matrix over F_p, row-major.
struct FpMatrix {
  uint32_t p = 2;
  size_t rows = 0;
  size_t cols = 0;
  std::vector<uint32_t> a;

  FpMatrix() = default;
  FpMatrix(uint32_t p_, size_t r, size_t c) : p(p_), rows(r), cols(c), a(r * c, 0) {}

  uint32_t& at(size_t i, size_t j) { return a[i * cols + j]; }
  uint32_t at(size_t i, size_t j) const { return a[i * cols + j]; }
};

using FpVector = std::vector<uint32_t>;

// Null space basis, one vector per free column of the reduced echelon form.
std::vector<FpVector> fp_kernel(const FpMatrix& mat);
size_t fp_rank(const FpMatrix& mat);
// Some solution of mat * x = rhs, or false when the system is inconsistent.
bool fp_solve(const FpMatrix& mat, const FpVector& rhs, FpVector& out);

uint32_t fp_inv(uint32_t a, uint32_t p);
bool is_prime(uint64_t n);

// Uniform draw from [0, n) by rejection on the raw 64-bit output, so results
// do not depend on the standard library's distribution implementation.
uint64_t uniform_below(std::mt19937_64& rng, uint64_t n);

class FieldCtx {
 public:
  static const FieldCtx& get(uint32_t p, int m);

  uint32_t p() const { return p_; }
  int m() const { return m_; }
  // Monic, little-endian, length m+1.
  const std::vector<uint32_t>& modulus() const { return modulus_; }
  // p^m when it fits in 64 bits, otherwise 0.
  uint64_t size() const { return size_; }
  std::string name() const;

  uint32_t inv_fp(uint32_t a) const { return inv_table_[a]; }

  FieldCtx(const FieldCtx&) = delete;
  FieldCtx& operator=(const FieldCtx&) = delete;

 private:
  friend class FieldElem;
  FieldCtx(uint32_t p, int m);

  uint32_t p_;
  int m_;
  uint64_t size_;
  std::vector<uint32_t> modulus_;
  std::vector<uint32_t> inv_table_;
  // Row j of red_ (length m) holds x^{m+j} mod modulus, for j = 0..m-2.
  std::vector<uint32_t> red_;
  // Column j of frob_ is (x^j)^p; column j of root_ is (x^j)^{1/p}.
  std::vector<uint32_t> frob_;
  std::vector<uint32_t> root_;
  // trace_[j] = Tr(x^j).
  std::vector<uint32_t> trace_;
};

class FieldElem {
 public:
  FieldElem() = default;
  explicit FieldElem(const FieldCtx& ctx) : ctx_(&ctx) { c_.fill(0); }

  static FieldElem zero(const FieldCtx& ctx) { return FieldElem(ctx); }
  static FieldElem one(const FieldCtx& ctx) { return from_int(ctx, 1); }
  static FieldElem from_int(const FieldCtx& ctx, int64_t v);
  static FieldElem from_coords(const FieldCtx& ctx, const std::vector<uint32_t>& coords);
  // The class of x, a generator of the field over F_p.
  static FieldElem gen(const FieldCtx& ctx);
  // Element whose coordinates are the base-p digits of n.
  static FieldElem from_index(const FieldCtx& ctx, uint64_t n);
  static FieldElem random(const FieldCtx& ctx, std::mt19937_64& rng);

  bool valid() const { return ctx_ != nullptr; }
  const FieldCtx& ctx() const { return *ctx_; }
  const FieldCtx* ctx_ptr() const { return ctx_; }
  uint32_t coord(int i) const { return c_[i]; }
  std::vector<uint32_t> coords() const;
  uint64_t index() const;

  bool is_zero() const;
  bool is_one() const;
  bool in_prime_field() const;
  // x lies in GF(p^d) iff x^{p^d} = x.
  bool in_subfield(int d) const;

  FieldElem operator+(const FieldElem& o) const;
  FieldElem operator-(const FieldElem& o) const;
  FieldElem operator-() const;
  FieldElem operator*(const FieldElem& o) const;
  FieldElem operator/(const FieldElem& o) const;
  FieldElem& operator+=(const FieldElem& o) { return *this = *this + o; }
  FieldElem& operator-=(const FieldElem& o) { return *this = *this - o; }
  FieldElem& operator*=(const FieldElem& o) { return *this = *this * o; }
  FieldElem scale(uint32_t k) const;

  bool operator==(const FieldElem& o) const;
  bool operator!=(const FieldElem& o) const { return !(*this == o); }
  // Total order on coordinate vectors (coordinate 0 first), same ctx only.
  bool operator<(const FieldElem& o) const;

  FieldElem inv() const;
  FieldElem pow(uint64_t e) const;
  // x^{p^k}; negative k takes p-th roots.
  FieldElem frob(int k = 1) const;
  FieldElem pth_root() const { return frob(-1); }
  // Absolute trace down to F_p, returned as an integer mod p.
  uint32_t trace() const;

  size_t hash() const;
  std::string str() const;

 private:
  friend class FieldCtx;
  void check_same(const FieldElem& o) const;
  FieldElem apply_matrix(const std::vector<uint32_t>& mat) const;

  const FieldCtx* ctx_ = nullptr;
  std::array<uint16_t, kMaxExt> c_{};
};

FieldElem frobenius(const FieldElem& x);
FieldElem pth_root(const FieldElem& x);

// F_p-matrix of the linear map z -> a*z (columns are images of basis vectors).
FpMatrix mul_matrix(const FieldElem& a);
// F_p-matrix of z -> z^{p^k}.
FpMatrix frob_matrix(const FieldCtx& ctx, int k);
FpVector to_vector(const FieldElem& x);
FieldElem from_vector(const FieldCtx& ctx, const FpVector& v);

// Distinct roots lying in the coefficients' field of the polynomial with the
// given little-endian coefficients. Sorted by operator<.
std::vector<FieldElem> field_roots(const std::vector<FieldElem>& coeffs);

// The canonical embedding GF(p^m) -> GF(p^M) for m | M. The image of x is the
// smallest (operator<) root of the small modulus in the big field, so the map
// is the same on every run.
FieldElem embed(const FieldElem& x, const FieldCtx& big);

// All elements of a small field, in index order.
std::vector<FieldElem> all_elements(const FieldCtx& ctx);

}  // namespace bigaction
