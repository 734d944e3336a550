#pragma once

// Main terms for sigma mex growth, Ingham's Tauberian translation, the
// Berndt-Kim expansion of alternating theta-type sums, and eta asymptotics.

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mexlab/bigreal.hpp"
#include "mexlab/mex_series.hpp"

namespace mexlab {

// C(e^{-y}) ~ mu y^nu e^{lambda/y}.
struct AsymptoticSpec {
  BigReal mu;
  BigReal nu;
  BigReal lambda;
  std::string description;
};

// (1/4, 0, pi^2/6): the growth of G_o and G_e.
AsymptoticSpec mex_half_spec(mpfr_prec_t prec = kDefaultPrecision);

// mu/(2 sqrt(pi)) lambda^{(2nu+1)/4} n^{-(2nu+3)/4} e^{2 sqrt(lambda n)}.
BigReal ingham_main_term(const AsymptoticSpec& spec, std::uint64_t n);

// exp(pi sqrt(2n/3)) / (8 (6n^3)^{1/4}); half the sigma mex main term.
BigReal mex_half_main_term(std::uint64_t n, mpfr_prec_t prec = kDefaultPrecision);
// exp(pi sqrt(2n/3)) / (4 (6n^3)^{1/4}).
BigReal sigma_main_term(std::uint64_t n, mpfr_prec_t prec = kDefaultPrecision);

// E_{2m} from sum_j C(2m, 2j) E_{2j} = 0, E_0 = 1. Odd index -> UsageError.
mpz_class euler_number(unsigned index);

// Physicists' Hermite polynomial H_n(x).
BigReal hermite(unsigned n, const BigReal& x);

struct BerndtKim {
  BigReal lhs;
  BigReal rhs;
};

// lhs = sum_{n>=0} (-1)^n e^{-(a n^2 + b n) y};
// rhs = e^{(a-2b) y/4} sum_{n<terms} E_{2n} a^n y^n / ((2n)! 2^{2n+1}) H_{2n}((b-a) sqrt(y) / (2 sqrt(a))).
BerndtKim berndt_kim(const mpq_class& a, const mpq_class& b, const BigReal& y, unsigned terms,
                     std::uint64_t max_terms = 10'000'000);

// log(1/(e^{-y};e^{-y})_inf) - pi^2/(6y) - log(y/(2 pi))/2.
BigReal eta_asym_deviation(const BigReal& y, std::uint64_t max_terms = 10'000'000);

// (-e^{-y};e^{-y})_inf^2 * 2 e^{-pi^2/(6y)}.
BigReal squared_quotient_limit(const BigReal& y, std::uint64_t max_terms = 10'000'000);

struct RatioRow {
  std::uint64_t n;
  mpz_class coefficient;
  BigReal main_term;
  BigReal ratio;
  std::optional<BigReal> odd_even_ratio;  // which == sigma only
};

// Rows for sigma_o, sigma_e (against mex_half_main_term) or sigma (against
// sigma_main_term, plus sigma_o/sigma_e). Checkpoints must be >= 1.
std::vector<RatioRow> ratio_report(Sequence which, const MexSeries& g,
                                   const std::vector<std::uint64_t>& checkpoints,
                                   mpfr_prec_t prec = kDefaultPrecision);
std::vector<RatioRow> ratio_report(Sequence which, const std::vector<std::uint64_t>& checkpoints,
                                   mpfr_prec_t prec = kDefaultPrecision);

std::string ratio_csv(const std::vector<RatioRow>& rows, int digits = 30);

}  // namespace mexlab
