#include "mexlab/series.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "mexlab/kernels.hpp"

namespace mexlab {

namespace {

void require_same_order(const TruncSeries& a, const TruncSeries& b, const char* op) {
  if (a.order() != b.order()) {
    throw UsageError(std::string(op) + ": order mismatch (" + std::to_string(a.order()) +
                     " vs " + std::to_string(b.order()) + ")");
  }
}

std::size_t sparse_threshold(std::size_t order) {
  return static_cast<std::size_t>(2.0 * std::sqrt(static_cast<double>(order)));
}

}  // namespace

TruncSeries::TruncSeries(std::vector<mpz_class> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw UsageError("TruncSeries needs at least one coefficient");
}

TruncSeries TruncSeries::from_ints(std::initializer_list<long> coeffs, std::size_t order) {
  if (coeffs.size() > order + 1) throw UsageError("from_ints: more coefficients than order + 1");
  std::vector<mpz_class> c(order + 1);
  std::copy(coeffs.begin(), coeffs.end(), c.begin());
  return TruncSeries(std::move(c));
}

std::size_t TruncSeries::nonzero_count() const {
  return static_cast<std::size_t>(
      std::count_if(coeffs_.begin(), coeffs_.end(), [](const mpz_class& c) { return sgn(c) != 0; }));
}

bool TruncSeries::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const mpz_class& c) { return sgn(c) == 0; });
}

std::string to_string(const TruncSeries& s) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i <= s.order(); ++i) os << (i ? ", " : "") << s[i].get_str();
  os << "] + O(q^" << s.order() + 1 << ')';
  return os.str();
}

TruncSeries one(std::size_t order) { return monomial(1, 0, order); }

TruncSeries monomial(long coef, std::size_t exponent, std::size_t order) {
  std::vector<mpz_class> c(order + 1);
  if (exponent <= order) c[exponent] = coef;
  return TruncSeries(std::move(c));
}

TruncSeries pochhammer(std::size_t m, std::size_t order) {
  if (m == 0) throw UsageError("pochhammer: m must be positive");
  std::vector<mpz_class> c(order + 1);
  c[0] = 1;
  for (std::size_t j = 1;; ++j) {
    const std::size_t lower = m * (j * (3 * j - 1) / 2);
    if (lower > order) break;
    const long sign = (j % 2 == 0) ? 1 : -1;
    c[lower] = sign;
    const std::size_t upper = m * (j * (3 * j + 1) / 2);
    if (upper <= order) c[upper] = sign;
  }
  return TruncSeries(std::move(c));
}

TruncSeries pochhammer_general(std::size_t a, std::size_t b, std::size_t order) {
  if (a == 0 || b == 0) throw UsageError("pochhammer_general: a and b must be positive");
  std::vector<mpz_class> c(order + 1);
  c[0] = 1;
  for (std::size_t e = a; e <= order; e += b) {
    // Multiply in place by (1 - q^e).
    for (std::size_t n = order; n >= e; --n) {
      c[n] -= c[n - e];
      if (n == e) break;
    }
  }
  return TruncSeries(std::move(c));
}

TruncSeries mul(const TruncSeries& a, const TruncSeries& b) {
  require_same_order(a, b, "mul");
  const std::size_t n = a.order();
  std::vector<mpz_class> out(n + 1);
  const std::size_t na = a.nonzero_count();
  const std::size_t nb = b.nonzero_count();
  const std::size_t limit = sparse_threshold(n);
  if (std::min(na, nb) <= limit) {
    const TruncSeries& sparse = na <= nb ? a : b;
    const TruncSeries& dense = na <= nb ? b : a;
    const auto terms = kernels::nonzero_terms(sparse.coeffs());
    kernels::sparse_convolve(terms, dense.coeffs(), out);
  } else {
    kernels::dense_convolve(a.coeffs(), b.coeffs(), out);
  }
  return TruncSeries(std::move(out));
}

TruncSeries invert(const TruncSeries& a) { return divide(one(a.order()), a); }

TruncSeries divide(const TruncSeries& numer, const TruncSeries& denom) {
  require_same_order(numer, denom, "divide");
  if (abs(denom[0]) != 1) throw InvalidUnit();
  std::vector<mpz_class> out(numer.order() + 1);
  const auto terms = kernels::nonzero_terms(denom.coeffs());
  kernels::divide_forward(numer.coeffs(), terms, out);
  return TruncSeries(std::move(out));
}

TruncSeries power(const TruncSeries& a, long exponent) {
  if (exponent < 0) return power(invert(a), -exponent);
  TruncSeries result = one(a.order());
  TruncSeries base = a;
  auto e = static_cast<unsigned long>(exponent);
  while (e != 0) {
    if (e & 1UL) result = mul(result, base);
    e >>= 1;
    if (e != 0) base = mul(base, base);
  }
  return result;
}

TruncSeries add_scaled(const TruncSeries& a, const TruncSeries& b, const mpz_class& alpha,
                       const mpz_class& beta) {
  require_same_order(a, b, "add_scaled");
  std::vector<mpz_class> out(a.order() + 1);
  for (std::size_t i = 0; i <= a.order(); ++i) out[i] = alpha * a[i] + beta * b[i];
  return TruncSeries(std::move(out));
}

TruncSeries add(const TruncSeries& a, const TruncSeries& b) { return add_scaled(a, b, 1, 1); }
TruncSeries sub(const TruncSeries& a, const TruncSeries& b) { return add_scaled(a, b, 1, -1); }

TruncSeries scale(const TruncSeries& a, const mpz_class& factor) {
  std::vector<mpz_class> out(a.order() + 1);
  for (std::size_t i = 0; i <= a.order(); ++i) out[i] = factor * a[i];
  return TruncSeries(std::move(out));
}

TruncSeries halve(const TruncSeries& a) {
  std::vector<mpz_class> out(a.order() + 1);
  for (std::size_t i = 0; i <= a.order(); ++i) {
    if (mpz_odd_p(a[i].get_mpz_t())) throw NotDivisible(i);
    mpz_divexact_ui(out[i].get_mpz_t(), a[i].get_mpz_t(), 2);
  }
  return TruncSeries(std::move(out));
}

TruncSeries dissect(const TruncSeries& a, std::size_t m, std::size_t r) {
  if (m == 0) throw UsageError("dissect: modulus must be positive");
  if (r >= m) throw UsageError("dissect: residue must be below the modulus");
  if (r > a.order()) throw UsageError("dissect: residue exceeds the series order");
  const std::size_t len = (a.order() - r) / m + 1;
  std::vector<mpz_class> out(len);
  for (std::size_t n = 0; n < len; ++n) out[n] = a[m * n + r];
  return TruncSeries(std::move(out));
}

TruncSeries substitute_power(const TruncSeries& a, std::size_t t) {
  if (t == 0) throw UsageError("substitute_power: t must be positive");
  return substitute_power(a, t, t * a.order());
}

TruncSeries substitute_power(const TruncSeries& a, std::size_t t, std::size_t order) {
  if (t == 0) throw UsageError("substitute_power: t must be positive");
  if (a.order() < order / t) throw UsageError("substitute_power: source order too small");
  std::vector<mpz_class> out(order + 1);
  for (std::size_t j = 0; j * t <= order; ++j) out[j * t] = a[j];
  return TruncSeries(std::move(out));
}

TruncSeries shift(const TruncSeries& a, std::size_t s) {
  std::vector<mpz_class> out(a.order() + 1);
  for (std::size_t i = s; i <= a.order(); ++i) out[i] = a[i - s];
  return TruncSeries(std::move(out));
}

TruncSeries truncate(const TruncSeries& a, std::size_t order) {
  if (order > a.order()) throw UsageError("truncate: cannot raise the order of a series");
  return TruncSeries(std::vector<mpz_class>(a.coeffs().begin(), a.coeffs().begin() + order + 1));
}

TruncSeries reduce_mod(const TruncSeries& a, const mpz_class& m) {
  if (m < 2) throw UsageError("reduce_mod: modulus must be at least 2");
  std::vector<mpz_class> out(a.order() + 1);
  for (std::size_t i = 0; i <= a.order(); ++i) {
    mpz_fdiv_r(out[i].get_mpz_t(), a[i].get_mpz_t(), m.get_mpz_t());
  }
  return TruncSeries(std::move(out));
}

}  // namespace mexlab
