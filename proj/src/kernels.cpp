#include "mexlab/kernels.hpp"

#include <cassert>

namespace mexlab::kernels {

namespace {

// acc += coef * x, with a cheap path for the +-1 coefficients that dominate
// pentagonal and theta series.
inline void accumulate(mpz_t acc, const mpz_class& coef, const mpz_class& x) {
  const mpz_srcptr c = coef.get_mpz_t();
  if (mpz_cmp_si(c, 1) == 0) {
    mpz_add(acc, acc, x.get_mpz_t());
  } else if (mpz_cmp_si(c, -1) == 0) {
    mpz_sub(acc, acc, x.get_mpz_t());
  } else {
    mpz_addmul(acc, c, x.get_mpz_t());
  }
}

inline void dense_entry(std::span<const mpz_class> a, std::span<const mpz_class> b,
                        std::size_t n, mpz_class& dst) {
  mpz_class acc;
  for (std::size_t i = 0; i <= n; ++i) {
    if (sgn(a[i]) == 0 || sgn(b[n - i]) == 0) continue;
    mpz_addmul(acc.get_mpz_t(), a[i].get_mpz_t(), b[n - i].get_mpz_t());
  }
  dst = std::move(acc);
}

inline void sparse_entry(std::span<const Term> sparse, std::span<const mpz_class> dense,
                         std::size_t n, mpz_class& dst) {
  mpz_class acc;
  for (const Term& t : sparse) {
    if (t.index > n) break;
    accumulate(acc.get_mpz_t(), t.value, dense[n - t.index]);
  }
  dst = std::move(acc);
}

}  // namespace

std::vector<Term> nonzero_terms(std::span<const mpz_class> coeffs) {
  std::vector<Term> terms;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (sgn(coeffs[i]) != 0) terms.push_back({i, coeffs[i]});
  }
  return terms;
}

void dense_convolve_serial(std::span<const mpz_class> a, std::span<const mpz_class> b,
                           std::span<mpz_class> out) {
  assert(a.size() >= out.size() && b.size() >= out.size());
  for (std::size_t n = 0; n < out.size(); ++n) dense_entry(a, b, n, out[n]);
}

void dense_convolve(std::span<const mpz_class> a, std::span<const mpz_class> b,
                    std::span<mpz_class> out) {
  assert(a.size() >= out.size() && b.size() >= out.size());
  const auto len = static_cast<long long>(out.size());
  // Work grows linearly in n; dynamic scheduling keeps threads balanced.
#pragma omp parallel for schedule(dynamic, 32)
  for (long long n = 0; n < len; ++n) {
    dense_entry(a, b, static_cast<std::size_t>(n), out[static_cast<std::size_t>(n)]);
  }
}

void sparse_convolve_serial(std::span<const Term> sparse, std::span<const mpz_class> dense,
                            std::span<mpz_class> out) {
  assert(dense.size() >= out.size());
  for (std::size_t n = 0; n < out.size(); ++n) sparse_entry(sparse, dense, n, out[n]);
}

void sparse_convolve(std::span<const Term> sparse, std::span<const mpz_class> dense,
                     std::span<mpz_class> out) {
  assert(dense.size() >= out.size());
  const auto len = static_cast<long long>(out.size());
#pragma omp parallel for schedule(dynamic, 64)
  for (long long n = 0; n < len; ++n) {
    sparse_entry(sparse, dense, static_cast<std::size_t>(n), out[static_cast<std::size_t>(n)]);
  }
}

void divide_forward(std::span<const mpz_class> numer, std::span<const Term> divisor_terms,
                    std::span<mpz_class> out) {
  assert(!divisor_terms.empty() && divisor_terms.front().index == 0);
  assert(numer.size() >= out.size());
  const bool negate = divisor_terms.front().value < 0;
  const auto tail = divisor_terms.subspan(1);
  for (std::size_t n = 0; n < out.size(); ++n) {
    // b_n = a0^{-1} (c_n - sum_{j>=1} a_j b_{n-j}), and a0^{-1} = a0.
    mpz_class acc = numer[n];
    for (const Term& t : tail) {
      if (t.index > n) break;
      const mpz_srcptr c = t.value.get_mpz_t();
      if (mpz_cmp_si(c, 1) == 0) {
        mpz_sub(acc.get_mpz_t(), acc.get_mpz_t(), out[n - t.index].get_mpz_t());
      } else if (mpz_cmp_si(c, -1) == 0) {
        mpz_add(acc.get_mpz_t(), acc.get_mpz_t(), out[n - t.index].get_mpz_t());
      } else {
        mpz_submul(acc.get_mpz_t(), c, out[n - t.index].get_mpz_t());
      }
    }
    if (negate) mpz_neg(acc.get_mpz_t(), acc.get_mpz_t());
    out[n] = std::move(acc);
  }
}

std::size_t count_divisible_serial(std::span<const mpz_class> coeffs, const mpz_class& modulus,
                                   std::size_t first, std::size_t last) {
  std::size_t count = 0;
  for (std::size_t n = first; n <= last; ++n) {
    if (mpz_divisible_p(coeffs[n].get_mpz_t(), modulus.get_mpz_t()) != 0) ++count;
  }
  return count;
}

std::size_t count_divisible(std::span<const mpz_class> coeffs, const mpz_class& modulus,
                            std::size_t first, std::size_t last) {
  if (first > last) return 0;
  long long count = 0;
  const auto lo = static_cast<long long>(first);
  const auto hi = static_cast<long long>(last);
#pragma omp parallel for reduction(+ : count) schedule(static)
  for (long long n = lo; n <= hi; ++n) {
    if (mpz_divisible_p(coeffs[static_cast<std::size_t>(n)].get_mpz_t(),
                        modulus.get_mpz_t()) != 0) {
      ++count;
    }
  }
  return static_cast<std::size_t>(count);
}

}  // namespace mexlab::kernels
