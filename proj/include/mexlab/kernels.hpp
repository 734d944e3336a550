#pragma once

// Convolution kernels behind TruncSeries multiplication and division.
//
// Every parallel kernel has a serial twin with identical semantics. The
// serial versions are the reference the tests compare against and the
// baseline the benchmark measures.

#include <gmpxx.h>

#include <cstddef>
#include <span>
#include <vector>

namespace mexlab::kernels {

struct Term {
  std::size_t index;
  mpz_class value;
};

std::vector<Term> nonzero_terms(std::span<const mpz_class> coeffs);

// out[n] = sum_{i+j=n} a[i] b[j] for n < out.size(). a and b must be at
// least as long as out.
void dense_convolve_serial(std::span<const mpz_class> a, std::span<const mpz_class> b,
                           std::span<mpz_class> out);
void dense_convolve(std::span<const mpz_class> a, std::span<const mpz_class> b,
                    std::span<mpz_class> out);

// Same product with one operand given as its sorted nonzero terms.
void sparse_convolve_serial(std::span<const Term> sparse, std::span<const mpz_class> dense,
                            std::span<mpz_class> out);
void sparse_convolve(std::span<const Term> sparse, std::span<const mpz_class> dense,
                     std::span<mpz_class> out);

// Solves divisor * out = numer by forward substitution. divisor_terms must be
// sorted, start at index 0, and have a constant term of +1 or -1. The
// recurrence is inherently sequential in n, so there is no parallel twin.
void divide_forward(std::span<const mpz_class> numer, std::span<const Term> divisor_terms,
                    std::span<mpz_class> out);

// Number of indices with coefficient divisible by modulus, over [first, last].
std::size_t count_divisible_serial(std::span<const mpz_class> coeffs, const mpz_class& modulus,
                                   std::size_t first, std::size_t last);
std::size_t count_divisible(std::span<const mpz_class> coeffs, const mpz_class& modulus,
                            std::size_t first, std::size_t last);

}  // namespace mexlab::kernels
