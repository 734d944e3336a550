#pragma once

// Eta quotients prod_{delta | N} eta(delta z)^{r_delta}: weight, the mod-24
// conditions, the Nebentypus character, and orders of vanishing at cusps.

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mexlab/series.hpp"
#include "mexlab/verdict.hpp"

namespace mexlab {

struct EtaQuotient {
  std::uint64_t level = 1;
  std::map<std::uint64_t, long> exponents;  // delta -> r_delta; absent means 0
};

// Validates that every key divides the level and some exponent is nonzero.
EtaQuotient make_eta_quotient(std::uint64_t level, std::map<std::uint64_t, long> exponents);

std::vector<std::uint64_t> divisors(std::uint64_t n);

mpq_class weight(const EtaQuotient& e);

struct LigozatConditions {
  mpz_class sum_a;  // sum delta r_delta
  mpz_class sum_b;  // sum (N/delta) r_delta
  bool ok = false;
};

LigozatConditions ligozat_conditions(const EtaQuotient& e);

int kronecker(long long a, long long n);
// a is reduced modulo 8|n| after its sign is accounted for.
int kronecker(const mpz_class& a, long long n);

// prod delta^{|r_delta|}: equals s = prod delta^{r_delta} up to a rational
// square, so both give the same Kronecker symbol at d coprime to the level.
mpz_class s_abs(const EtaQuotient& e);

// ((-1)^l s / d). Throws NotIntegralWeight, or UsageError if gcd(d, N) != 1.
int character(const EtaQuotient& e, long long d);

// "chi_0" for the trivial character, otherwise "(D/.)" with D the
// squarefree part of (-1)^l s. Requires integral weight.
std::string character_descriptor(const EtaQuotient& e);

// Ligozat's order of vanishing at a cusp c/d (independent of c).
mpq_class cusp_order(const EtaQuotient& e, std::uint64_t d);

// gcd(d,12)^2 (2^{k+1}-2) + gcd(d,24)^2 (1-2^{k-1}); d must divide 288.
mpz_class s_value(unsigned k, std::uint64_t d);

struct HolomorphyReport {
  bool ok = false;
  mpq_class weight;
  std::uint64_t level = 0;
  std::string character_descriptor;  // "undefined" for non-integral weight
  LigozatConditions conditions;
  std::optional<std::uint64_t> failing_cusp;
};

HolomorphyReport is_holomorphic_modular_form(const EtaQuotient& e);

// eta^{2^{k+1}-2}(12z) / eta^{2^k-2}(24z) at level 288; k >= 1.
EtaQuotient build_A_k(unsigned k);
// eta^2(12z) at level 144.
EtaQuotient build_B_star();

// The quotient as a q-series to the given order, the q^{sum/24} prefactor
// applied as an integer shift. Requires sum delta r_delta = 0 (mod 24) and
// a non-negative leading exponent.
TruncSeries eta_expand(const EtaQuotient& e, std::size_t order);

// A_k = A* (mod 2^{k+1}) with A* = sum alpha(n) q^{12n+1}, alpha from f2^2/f1^2,
// plus eta^{2^{k+1}}(12z)/eta^{2^k}(24z) = 1 (mod 2^{k+1}); both to the given order.
Verdict congruence_witness(unsigned k, std::size_t order);

struct STableRow {
  std::uint64_t d;
  std::uint64_t gcd12;
  std::uint64_t gcd24;
  mpz_class s;
  mpq_class cusp_order;
};

std::vector<STableRow> s_table(unsigned k);
std::string s_table_csv(const std::vector<STableRow>& rows);

}  // namespace mexlab
