#pragma once

// Truncated power series in q with exact integer coefficients.
//
// A TruncSeries of order N holds the coefficients of q^0 .. q^N. The order is
// part of the value: binary operations demand equal orders and throw
// UsageError otherwise, instead of silently truncating to the smaller one.
// Values are immutable once built; every operation returns a new series.

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "mexlab/errors.hpp"

namespace mexlab {

class TruncSeries {
 public:
  // The zero series of order 0.
  TruncSeries() : coeffs_(1) {}

  // The zero series of the given order.
  explicit TruncSeries(std::size_t order) : coeffs_(order + 1) {}

  // Takes ownership of coefficients q^0 .. q^{size-1}; must be non-empty.
  explicit TruncSeries(std::vector<mpz_class> coeffs);

  // Small literals for tests and tables; missing trailing entries are zero.
  static TruncSeries from_ints(std::initializer_list<long> coeffs, std::size_t order);

  std::size_t order() const noexcept { return coeffs_.size() - 1; }
  const mpz_class& operator[](std::size_t i) const { return coeffs_[i]; }
  std::span<const mpz_class> coeffs() const noexcept { return coeffs_; }

  std::size_t nonzero_count() const;
  bool is_zero() const;

  friend bool operator==(const TruncSeries& a, const TruncSeries& b) {
    return a.coeffs_ == b.coeffs_;
  }

 private:
  std::vector<mpz_class> coeffs_;
};

std::string to_string(const TruncSeries& s);

TruncSeries one(std::size_t order);

// coef * q^exponent truncated at order (zero if exponent > order).
TruncSeries monomial(long coef, std::size_t exponent, std::size_t order);

// (q^m; q^m)_inf from the pentagonal number theorem: only the terms
// (-1)^j q^{m j(3j-1)/2}, j in Z, are ever touched.
TruncSeries pochhammer(std::size_t m, std::size_t order);

// (q^a; q^b)_inf = prod_{j>=0} (1 - q^{a+jb}), by multiplying out the
// finitely many factors that survive truncation.
TruncSeries pochhammer_general(std::size_t a, std::size_t b, std::size_t order);

// Truncated Cauchy product. Switches to the sparse kernel when either operand
// has at most 2*sqrt(N) nonzero terms.
TruncSeries mul(const TruncSeries& a, const TruncSeries& b);

// Multiplicative inverse; the constant term must be +1 or -1 (InvalidUnit).
TruncSeries invert(const TruncSeries& a);

// numer / denom with denom[0] = +-1, without forming 1/denom first.
TruncSeries divide(const TruncSeries& numer, const TruncSeries& denom);

// a^e; negative exponents go through invert.
TruncSeries power(const TruncSeries& a, long exponent);

TruncSeries add_scaled(const TruncSeries& a, const TruncSeries& b, const mpz_class& alpha,
                       const mpz_class& beta);
TruncSeries add(const TruncSeries& a, const TruncSeries& b);
TruncSeries sub(const TruncSeries& a, const TruncSeries& b);
TruncSeries scale(const TruncSeries& a, const mpz_class& factor);

// Exact coefficientwise division by 2; throws NotDivisible on the first odd
// coefficient.
TruncSeries halve(const TruncSeries& a);

// T[n] = A[m n + r] for m n + r <= N; order floor((N - r) / m).
TruncSeries dissect(const TruncSeries& a, std::size_t m, std::size_t r);

// A(q^t) at outer order t * A.order().
TruncSeries substitute_power(const TruncSeries& a, std::size_t t);
// A(q^t) at an explicit outer order; requires A.order() >= floor(order / t).
TruncSeries substitute_power(const TruncSeries& a, std::size_t t, std::size_t order);

// q^s * A at the same order (top s coefficients fall off).
TruncSeries shift(const TruncSeries& a, std::size_t s);

// Coefficients 0..order of a; order must not exceed a.order().
TruncSeries truncate(const TruncSeries& a, std::size_t order);

// Least non-negative residues modulo m >= 2.
TruncSeries reduce_mod(const TruncSeries& a, const mpz_class& m);

}  // namespace mexlab
