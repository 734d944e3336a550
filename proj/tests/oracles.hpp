#pragma once

// Test-only reference computations. These deliberately avoid the library's
// algorithms: plain machine-word loops over definitions.

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "mexlab/series.hpp"

namespace oracle {

// prod_{k in factors} (1 - q^k) to order n, factor by factor.
inline std::vector<long long> product_of_factors(const std::vector<std::size_t>& factors,
                                                 std::size_t n) {
  std::vector<long long> c(n + 1, 0);
  c[0] = 1;
  for (std::size_t e : factors) {
    if (e > n) continue;
    for (std::size_t i = n; i >= e; --i) {
      c[i] -= c[i - e];
      if (i == e) break;
    }
  }
  return c;
}

// (q^m; q^m)_inf by multiplying every factor (1 - q^{mk}), mk <= n.
inline std::vector<long long> naive_euler_product(std::size_t m, std::size_t n) {
  std::vector<std::size_t> f;
  for (std::size_t k = m; k <= n; k += m) f.push_back(k);
  return product_of_factors(f, n);
}

inline std::vector<long long> naive_convolve(const std::vector<long long>& a,
                                             const std::vector<long long>& b) {
  std::vector<long long> c(a.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; i + j < a.size(); ++j) c[i + j] += a[i] * b[j];
  }
  return c;
}

// Number of partitions of n with all parts <= maxpart, by recursion.
inline std::uint64_t count_partitions(unsigned n, unsigned maxpart) {
  if (n == 0) return 1;
  std::uint64_t total = 0;
  for (unsigned p = std::min(n, maxpart); p >= 1; --p) total += count_partitions(n - p, p);
  return total;
}

// Distinct-part partitions of n with parts <= maxpart.
inline std::uint64_t count_distinct_partitions(unsigned n, unsigned maxpart) {
  if (n == 0) return 1;
  std::uint64_t total = 0;
  for (unsigned p = std::min(n, maxpart); p >= 1; --p) {
    total += count_distinct_partitions(n - p, p - 1);
  }
  return total;
}

// Plain recursive enumeration of partitions, used to cross-check the
// successor-based enumerator.
inline void enumerate(unsigned n, unsigned maxpart, std::vector<unsigned>& prefix,
                      const std::function<void(const std::vector<unsigned>&)>& visit) {
  if (n == 0) {
    visit(prefix);
    return;
  }
  for (unsigned p = std::min(n, maxpart); p >= 1; --p) {
    prefix.push_back(p);
    enumerate(n - p, p, prefix, visit);
    prefix.pop_back();
  }
}

// Mex by linear search over candidate values.
inline unsigned mex_by_search(const std::vector<unsigned>& parts) {
  for (unsigned m = 1;; ++m) {
    bool found = false;
    for (unsigned p : parts) found = found || (p == m);
    if (!found) return m;
  }
}

// (sigma_o, sigma_e) straight from the definition.
inline std::pair<std::uint64_t, std::uint64_t> sigma_split(unsigned n) {
  std::uint64_t odd = 0;
  std::uint64_t even = 0;
  std::vector<unsigned> prefix;
  enumerate(n, n, prefix, [&](const std::vector<unsigned>& parts) {
    const unsigned m = mex_by_search(parts);
    (m % 2 ? odd : even) += m;
  });
  return {odd, even};
}

inline mexlab::TruncSeries to_series(const std::vector<long long>& c) {
  std::vector<mpz_class> v;
  v.reserve(c.size());
  for (long long x : c) v.emplace_back(static_cast<long>(x));
  return mexlab::TruncSeries(std::move(v));
}

inline mexlab::TruncSeries random_series(std::mt19937_64& rng, std::size_t order, long lo,
                                         long hi, double density = 1.0) {
  std::uniform_int_distribution<long> val(lo, hi);
  std::bernoulli_distribution keep(density);
  std::vector<mpz_class> v(order + 1);
  for (auto& x : v) {
    if (keep(rng)) x = val(rng);
  }
  return mexlab::TruncSeries(std::move(v));
}

inline bool is_generalized_pentagonal(long long n) {
  for (long long j = 0;; ++j) {
    const long long a = j * (3 * j - 1) / 2;
    const long long b = j * (3 * j + 1) / 2;
    if (a == n || b == n) return true;
    if (a > n) return false;
  }
}

}  // namespace oracle
