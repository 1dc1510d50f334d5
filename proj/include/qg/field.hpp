#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <vector>

#include "qg/errors.hpp"

namespace qg {

/// Exact arithmetic in GF(p^r).
///
/// Elements are length-r coefficient vectors over F_p, little-endian in the
/// powers of the primitive root of the modulus. Every element also has an
/// integer tag in [0, q-1], tag = sum coeffs[i]*p^i; tags are the I/O form,
/// coefficients the working form.
///
/// A Field is immutable after construction; all operations are pure.
class Field {
 public:
  using Elem = std::vector<int>;

  /// Builds GF(p^r). If no modulus is given, picks the canonical one: the
  /// monic irreducible of degree r whose coefficient vector has the smallest
  /// integer encoding sum c_i*p^i. A supplied modulus must be monic of
  /// degree r and irreducible.
  explicit Field(int p, int r,
                 std::optional<std::vector<int>> modulus = std::nullopt)
      : p_(p), r_(r) {
    if (!is_prime(p)) fail(errc::not_prime, "p = " + std::to_string(p));
    if (r < 1) fail(errc::invalid_params, "r must be >= 1");
    q_ = 1;
    for (int i = 0; i < r; ++i) q_ *= p;
    if (modulus) {
      modulus_ = std::move(*modulus);
      if (static_cast<int>(modulus_.size()) != r + 1 || modulus_[r] != 1)
        fail(errc::invalid_params, "modulus must be monic of degree r");
      for (int& c : modulus_) c = ((c % p) + p) % p;
      if (!poly_irreducible(modulus_))
        fail(errc::reducible_modulus);
    } else {
      modulus_ = canonical_modulus();
    }
    // x^r = -(low part of modulus), the reduction rule for products.
    reduction_.assign(r_, 0);
    for (int i = 0; i < r_; ++i) reduction_[i] = (p_ - modulus_[i]) % p_;
    beta_ = find_generator();
  }

  int p() const { return p_; }
  int r() const { return r_; }
  long q() const { return q_; }
  const std::vector<int>& modulus() const { return modulus_; }
  const Elem& beta() const { return beta_; }

  Elem zero() const { return Elem(r_, 0); }
  Elem one() const { return from_tag(1); }

  Elem from_tag(long t) const {
    if (t < 0 || t >= q_) fail(errc::out_of_range, "tag " + std::to_string(t));
    Elem e(r_);
    for (int i = 0; i < r_; ++i) {
      e[i] = static_cast<int>(t % p_);
      t /= p_;
    }
    return e;
  }

  long tag(const Elem& a) const {
    long t = 0;
    for (int i = r_ - 1; i >= 0; --i) t = t * p_ + a[i];
    return t;
  }

  bool is_zero(const Elem& a) const {
    return std::all_of(a.begin(), a.end(), [](int c) { return c == 0; });
  }

  Elem add(const Elem& a, const Elem& b) const {
    Elem r(r_);
    for (int i = 0; i < r_; ++i) r[i] = (a[i] + b[i]) % p_;
    return r;
  }

  Elem sub(const Elem& a, const Elem& b) const {
    Elem r(r_);
    for (int i = 0; i < r_; ++i) r[i] = (a[i] - b[i] + p_) % p_;
    return r;
  }

  Elem neg(const Elem& a) const { return sub(zero(), a); }

  Elem mul(const Elem& a, const Elem& b) const {
    std::vector<int> prod(2 * r_ - 1, 0);
    for (int i = 0; i < r_; ++i) {
      if (a[i] == 0) continue;
      for (int j = 0; j < r_; ++j)
        prod[i + j] = (prod[i + j] + a[i] * b[j]) % p_;
    }
    for (int k = 2 * r_ - 2; k >= r_; --k) {
      const int c = prod[k];
      if (c == 0) continue;
      prod[k] = 0;
      for (int i = 0; i < r_; ++i)
        prod[k - r_ + i] = (prod[k - r_ + i] + c * reduction_[i]) % p_;
    }
    prod.resize(r_);
    return prod;
  }

  /// a^k, any integer k; negative exponents go through inv.
  Elem pow(const Elem& a, long k) const {
    if (k < 0) return pow(inv(a), -k);
    Elem result = one();
    Elem base = a;
    while (k > 0) {
      if (k & 1) result = mul(result, base);
      base = mul(base, base);
      k >>= 1;
    }
    return result;
  }

  Elem inv(const Elem& a) const {
    if (is_zero(a)) fail(errc::division_by_zero, "inv(0)");
    return pow(a, q_ - 2);
  }

  /// Smallest k >= 1 with a^k = 1; divides q-1. q-1 is factored by trial
  /// division (desk scale).
  long element_order(const Elem& a) const {
    if (is_zero(a)) fail(errc::zero_element, "element_order(0)");
    long order = q_ - 1;
    for (long f : prime_factors(q_ - 1)) {
      while (order % f == 0 && pow(a, order / f) == one()) order /= f;
    }
    return order;
  }

  /// Horner evaluation of a polynomial with GF(q) coefficients (low degree
  /// first) at x. The empty polynomial evaluates to 0.
  Elem poly_eval(const std::vector<Elem>& coeffs, const Elem& x) const {
    Elem acc = zero();
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
      acc = add(mul(acc, x), *it);
    return acc;
  }

 private:
  static bool is_prime(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
      if (n % d == 0) return false;
    return true;
  }

  static std::vector<long> prime_factors(long n) {
    std::vector<long> fs;
    for (long f = 2; f * f <= n; ++f) {
      if (n % f == 0) {
        fs.push_back(f);
        while (n % f == 0) n /= f;
      }
    }
    if (n > 1) fs.push_back(n);
    return fs;
  }

  // Remainder of a mod b over F_p; b monic-led after normalization.
  std::vector<int> poly_mod(std::vector<int> a, const std::vector<int>& b) const {
    auto trim = [](std::vector<int>& v) {
      while (!v.empty() && v.back() == 0) v.pop_back();
    };
    trim(a);
    const int db = static_cast<int>(b.size()) - 1;
    const int lead_inv = mod_inverse(b[db], p_);
    while (static_cast<int>(a.size()) - 1 >= db && !a.empty()) {
      const int shift = static_cast<int>(a.size()) - 1 - db;
      const int factor = static_cast<int>((static_cast<long>(a.back()) * lead_inv) % p_);
      for (int i = 0; i <= db; ++i)
        a[shift + i] = ((a[shift + i] - factor * b[i]) % p_ + p_) % p_;
      trim(a);
    }
    return a;
  }

  static int mod_inverse(int a, int p) {
    int result = 1, base = ((a % p) + p) % p, e = p - 2;
    while (e > 0) {
      if (e & 1) result = static_cast<int>((static_cast<long>(result) * base) % p);
      base = static_cast<int>((static_cast<long>(base) * base) % p);
      e >>= 1;
    }
    return result;
  }

  /// Trial division by every monic polynomial of degree 1..deg/2.
  bool poly_irreducible(const std::vector<int>& poly) const {
    const int deg = static_cast<int>(poly.size()) - 1;
    if (deg == 1) return true;
    for (int d = 1; d <= deg / 2; ++d) {
      long count = 1;
      for (int i = 0; i < d; ++i) count *= p_;
      for (long low = 0; low < count; ++low) {
        std::vector<int> divisor(d + 1);
        long t = low;
        for (int i = 0; i < d; ++i) {
          divisor[i] = static_cast<int>(t % p_);
          t /= p_;
        }
        divisor[d] = 1;
        if (poly_mod(poly, divisor).empty()) return false;
      }
    }
    return true;
  }

  std::vector<int> canonical_modulus() const {
    for (long low = 0; low < q_; ++low) {
      std::vector<int> cand(r_ + 1);
      long t = low;
      for (int i = 0; i < r_; ++i) {
        cand[i] = static_cast<int>(t % p_);
        t /= p_;
      }
      cand[r_] = 1;
      if (poly_irreducible(cand)) return cand;
    }
    fail(errc::reducible_modulus, "no irreducible of requested degree");
  }

  /// Smallest-tag element of multiplicative order q-1.
  Elem find_generator() const {
    for (long t = 1; t < q_; ++t) {
      Elem e = from_tag(t);
      if (element_order(e) == q_ - 1) return e;
    }
    fail(errc::no_generator);
  }

  int p_;
  int r_;
  long q_;
  std::vector<int> modulus_;
  std::vector<int> reduction_;
  Elem beta_;
};

/// Exact rank of a rectangular matrix over GF(q): Gaussian elimination with
/// the first-nonzero pivot rule (deterministic; exact arithmetic needs no
/// pivoting heuristics).
inline long rank(const Field& F, std::vector<std::vector<Field::Elem>> M) {
  if (M.empty()) return 0;
  const size_t rows = M.size();
  const size_t cols = M[0].size();
  for (const auto& row : M)
    if (row.size() != cols) fail(errc::bad_shape, "ragged matrix");
  size_t pivot_row = 0;
  long rank_count = 0;
  for (size_t c = 0; c < cols && pivot_row < rows; ++c) {
    size_t pivot = pivot_row;
    while (pivot < rows && F.is_zero(M[pivot][c])) ++pivot;
    if (pivot == rows) continue;
    std::swap(M[pivot_row], M[pivot]);
    const Field::Elem scale = F.inv(M[pivot_row][c]);
    for (size_t j = c; j < cols; ++j)
      M[pivot_row][j] = F.mul(scale, M[pivot_row][j]);
    for (size_t i = pivot_row + 1; i < rows; ++i) {
      if (F.is_zero(M[i][c])) continue;
      const Field::Elem factor = M[i][c];
      for (size_t j = c; j < cols; ++j)
        M[i][j] = F.sub(M[i][j], F.mul(factor, M[pivot_row][j]));
    }
    ++pivot_row;
    ++rank_count;
  }
  return rank_count;
}

}  // namespace qg
