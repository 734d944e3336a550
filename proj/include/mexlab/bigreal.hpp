#pragma once

// Multiple-precision reals over MPFR. Each value carries its own precision;
// binary operations produce a result at the larger of the two.

#include <gmpxx.h>
#include <mpfr.h>

#include <string>

namespace mexlab {

inline constexpr mpfr_prec_t kDefaultPrecision = 256;

class BigReal {
 public:
  explicit BigReal(mpfr_prec_t prec = kDefaultPrecision);
  BigReal(long v, mpfr_prec_t prec);
  BigReal(const mpz_class& v, mpfr_prec_t prec);
  BigReal(const mpq_class& v, mpfr_prec_t prec);
  static BigReal parse(const std::string& text, mpfr_prec_t prec);

  BigReal(const BigReal& o);
  BigReal(BigReal&& o) noexcept;
  BigReal& operator=(const BigReal& o);
  BigReal& operator=(BigReal&& o) noexcept;
  ~BigReal();

  mpfr_prec_t precision() const { return mpfr_get_prec(v_); }
  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  // Scientific notation with the given number of significant digits.
  std::string to_string(int digits = 30) const;

  BigReal& operator+=(const BigReal& o);
  BigReal& operator-=(const BigReal& o);
  BigReal& operator*=(const BigReal& o);
  BigReal& operator/=(const BigReal& o);

  friend BigReal operator+(BigReal a, const BigReal& b) { return a += b; }
  friend BigReal operator-(BigReal a, const BigReal& b) { return a -= b; }
  friend BigReal operator*(BigReal a, const BigReal& b) { return a *= b; }
  friend BigReal operator/(BigReal a, const BigReal& b) { return a /= b; }
  BigReal operator-() const;

  friend int compare(const BigReal& a, const BigReal& b) { return mpfr_cmp(a.v_, b.v_); }
  friend bool operator<(const BigReal& a, const BigReal& b) { return compare(a, b) < 0; }
  friend bool operator>(const BigReal& a, const BigReal& b) { return compare(a, b) > 0; }
  friend bool operator<=(const BigReal& a, const BigReal& b) { return compare(a, b) <= 0; }
  friend bool operator>=(const BigReal& a, const BigReal& b) { return compare(a, b) >= 0; }
  friend bool operator==(const BigReal& a, const BigReal& b) { return compare(a, b) == 0; }

 private:
  void widen_to(mpfr_prec_t p);
  mpfr_t v_;
};

BigReal pi(mpfr_prec_t prec);
BigReal exp(const BigReal& x);
BigReal log(const BigReal& x);
BigReal log1p(const BigReal& x);
BigReal sqrt(const BigReal& x);
BigReal pow(const BigReal& x, const BigReal& y);
BigReal abs(const BigReal& x);
// 2^e exactly.
BigReal exp2i(long e, mpfr_prec_t prec);

// Agreement to `digits` significant decimal digits: |a - b| <= 10^{-digits} |b|.
bool agree_digits(const BigReal& a, const BigReal& b, int digits);

}  // namespace mexlab
