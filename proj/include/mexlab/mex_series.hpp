#pragma once

// Generating functions for sigma_o mex / sigma_e mex and congruence checking.
//
//   G_o = (f2^2/f1^2 + f1^2) / 2,   G_e = (f2^2/f1^2 - f1^2) / 2,
//
// with f_m = (q^m; q^m)_inf. f1^2 = sum a(n) q^n is also exposed because
// G_o - G_e = f1^2 drives the prime families.

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "mexlab/series.hpp"
#include "mexlab/verdict.hpp"

namespace mexlab {

enum class Sequence { sigma_o, sigma_e, sigma, a };

std::string_view sequence_name(Sequence s);
// Accepts the names produced by sequence_name plus G_o / G_e aliases.
Sequence parse_sequence(std::string_view name);

struct MexSeries {
  TruncSeries odd;   // G_o
  TruncSeries even;  // G_e
};

MexSeries g_series(std::size_t order);

// f2^2 / f1^2 = (-q; q)_inf^2, the sigma mex generating function.
TruncSeries sigma_series(std::size_t order);

// f1^2 = sum a(n) q^n via sparse self-convolution of the pentagonal series.
TruncSeries f1sq_series(std::size_t order);

TruncSeries sequence_series(Sequence s, std::size_t order);

// Claim "c(m n + r) = 0 (mod modulus) for all n >= 0" about one sequence.
struct CongruenceTarget {
  std::uint64_t m = 1;
  std::uint64_t r = 0;
  std::uint64_t modulus = 2;
  std::string label;
  Sequence sequence = Sequence::sigma_o;
};

std::string describe(const CongruenceTarget& t);

// Checks every coefficient with index = r (mod m) up to the series order.
// Requires series.order() >= t.r.
Verdict check_congruence(const TruncSeries& series, const CongruenceTarget& t);

// The seven fixed congruences: three classical ones, two further
// ones, and the two at 10n+6, 10n+8.
std::vector<CongruenceTarget> fixed_congruences();

bool is_prime(std::uint64_t n);

struct FamilyParams {
  std::uint64_t p = 5;
  int part = 1;                 // 1, 2 or 3
  std::vector<std::uint64_t> ks;  // empty means every admissible k
};

// All k in [1, p) admissible for the given part; throws InvalidFamily when p
// itself is outside the part's residue classes.
std::vector<std::uint64_t> admissible_ks(std::uint64_t p, int part);

// Progressions m n + k p + (p^2 - 1)/12 with (m, modulus, sequence) =
// (2p^2, 4, sigma_e), (4p^2, 8, sigma_e), (4p^2, 4, sigma_o) for parts 1..3.
std::vector<CongruenceTarget> family_targets(const FamilyParams& f);

// Default verification order for a prime family: 4 p^2 * 50.
std::size_t family_order(std::uint64_t p);

// a(p n + (p^2-1)/12) = eps a(n/p) and a(p^2 n + p k + (p^2-1)/12) = 0 for
// every reachable index; eps = -1 iff p = 5 (mod 12). Throws InvalidPrime for
// p outside 5, 7, 11 (mod 12).
Verdict cooper_check(std::uint64_t p, std::size_t order);
Verdict cooper_check(std::uint64_t p, const TruncSeries& a);
int cooper_epsilon(std::uint64_t p);

// Exact equality sigma_o = sigma_e on every p^2 n + p k + (p^2-1)/12,
// 1 <= k < p.
Verdict progression_equality_check(const MexSeries& g, std::uint64_t p);

struct DensityPoint {
  std::size_t x;
  mpq_class delta;  // #{1 <= n <= x : c(n) = 0 mod M} / x
};

// Index 0 is never counted. Checkpoints are returned sorted ascending.
std::vector<DensityPoint> density_scan(const TruncSeries& series, const mpz_class& modulus,
                                       std::vector<std::size_t> checkpoints);

}  // namespace mexlab
