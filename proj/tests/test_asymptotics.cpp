#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "mexlab/asymptotics.hpp"
#include "mexlab/errors.hpp"

using namespace mexlab;

namespace {

constexpr mpfr_prec_t P = 256;

BigReal R(long v) { return BigReal(v, P); }
BigReal Q(long n, long d) { return BigReal(mpq_class(n, d), P); }

// Secant numbers |E_{2m}| from the power series 1/cos x, inverted with rationals.
std::vector<mpz_class> secant_numbers(unsigned m_max) {
  const unsigned n = 2 * m_max;
  std::vector<mpq_class> cosc(n + 1, 0);
  mpz_class fact = 1;
  for (unsigned k = 0; k <= n; ++k) {
    if (k > 0) fact *= k;
    if (k % 2 == 0) cosc[k] = mpq_class((k / 2) % 2 ? -1 : 1, fact);
  }
  std::vector<mpq_class> sec(n + 1, 0);
  sec[0] = 1;
  for (unsigned k = 1; k <= n; ++k) {
    mpq_class acc = 0;
    for (unsigned j = 1; j <= k; ++j) acc += cosc[j] * sec[k - j];
    sec[k] = -acc;
  }
  std::vector<mpz_class> out;
  fact = 1;
  for (unsigned k = 0; k <= n; ++k) {
    if (k > 0) fact *= k;
    if (k % 2 == 0) {
      mpq_class v = sec[k] * fact;
      v.canonicalize();
      out.push_back(v.get_num());
    }
  }
  return out;
}

// H_n(x) = n! sum_m (-1)^m (2x)^{n-2m} / (m! (n-2m)!) at rational x.
mpq_class hermite_explicit(unsigned n, const mpq_class& x) {
  auto fact = [](unsigned k) {
    mpz_class f = 1;
    for (unsigned i = 2; i <= k; ++i) f *= i;
    return f;
  };
  mpq_class sum = 0;
  for (unsigned m = 0; 2 * m <= n; ++m) {
    mpq_class term = 1;
    for (unsigned i = 0; i < n - 2 * m; ++i) term *= 2 * x;
    term /= mpq_class(fact(m) * fact(n - 2 * m));
    sum += (m % 2 ? -term : term);
  }
  return sum * fact(n);
}

// Euler polynomial E_k(x) = sum_j C(k,j) (E_j / 2^j) (x - 1/2)^{k-j}.
mpq_class euler_polynomial(unsigned k, const mpq_class& x, const std::vector<mpz_class>& sec) {
  mpq_class sum = 0;
  for (unsigned j = 0; j <= k; j += 2) {
    mpz_class c;
    mpz_bin_uiui(c.get_mpz_t(), k, j);
    const mpz_class ej = (j / 2) % 2 ? -sec[j / 2] : sec[j / 2];
    mpq_class term(c * ej, mpz_class(1) << j);
    for (unsigned i = 0; i < k - j; ++i) term *= x - mpq_class(1, 2);
    sum += term;
  }
  return sum;
}

// Euler-Boole expansion of sum (-1)^n e^{-(a n^2 + b n) y} through y^M.
BigReal alternating_oracle(const mpq_class& a, const mpq_class& b, const BigReal& y, unsigned M) {
  const auto sec = secant_numbers(M + 1);
  mpq_class h = b / (2 * a);
  h.canonicalize();
  BigReal sum(P);
  BigReal ay_pow = R(1);
  mpz_class fact = 1;
  for (unsigned m = 0; m <= M; ++m) {
    if (m > 0) {
      fact *= m;
      ay_pow *= -(BigReal(a, P) * y);
    }
    sum += BigReal(euler_polynomial(2 * m, h, sec), P) * ay_pow / BigReal(fact, P);
  }
  mpq_class g = b * b / (4 * a);
  g.canonicalize();
  return exp(BigReal(g, P) * y) * sum / R(2);
}

}  // namespace

TEST_CASE("ingham translation equals the closed form") {
  const AsymptoticSpec spec = mex_half_spec(P);
  for (std::uint64_t n : {1U, 10U, 100U, 10000U}) {
    const BigReal nn(static_cast<long>(n), P);
    // exp(pi sqrt(2n/3)) / (8 (6 n^3)^{1/4}), written out independently.
    BigReal e(P);
    mpfr_const_pi(e.get(), MPFR_RNDN);
    const BigReal closed = exp(e * sqrt(R(2) * nn / R(3))) / (R(8) * pow(R(6) * nn * nn * nn, Q(1, 4)));
    CHECK(agree_digits(ingham_main_term(spec, n), closed, 50));
    CHECK(agree_digits(mex_half_main_term(n, P), closed, 50));
    CHECK(agree_digits(sigma_main_term(n, P), R(2) * closed, 50));
  }
  AsymptoticSpec doubled = spec;
  doubled.mu = Q(1, 2);
  CHECK(agree_digits(ingham_main_term(doubled, 77), R(2) * ingham_main_term(spec, 77), 60));
  CHECK(agree_digits(ingham_main_term(doubled, 77), sigma_main_term(77, P), 50));
  AsymptoticSpec bad = spec;
  bad.lambda = R(0);
  CHECK_THROWS_AS(ingham_main_term(bad, 5), UsageError);
}

TEST_CASE("euler numbers") {
  CHECK(euler_number(0) == 1);
  CHECK(euler_number(2) == -1);
  CHECK(euler_number(4) == 5);
  CHECK(euler_number(6) == -61);
  CHECK(euler_number(8) == 1385);
  CHECK_THROWS_AS(euler_number(3), UsageError);
  const auto sec = secant_numbers(12);
  for (unsigned m = 0; m <= 12; ++m) {
    const mpz_class e = euler_number(2 * m);
    CHECK(abs(e) == sec[m]);
    CHECK(sgn(e) == (m % 2 ? -1 : 1));
    if (m >= 2) CHECK(abs(e) > abs(euler_number(2 * m - 2)));
  }
}

TEST_CASE("hermite") {
  CHECK(hermite(0, Q(3, 7)) == R(1));
  CHECK(hermite(4, R(0)) == R(12));
  const BigReal x = Q(5, 3);
  CHECK(agree_digits(hermite(2, x), R(4) * x * x - R(2), 70));
  for (unsigned n = 0; n <= 8; ++n) {
    for (const mpq_class& xv : {mpq_class(0), mpq_class(1, 2), mpq_class(-1, 2), mpq_class(1), mpq_class(-1)}) {
      CHECK(hermite(n, BigReal(xv, P)) == BigReal(hermite_explicit(n, xv), P));
    }
  }
}

TEST_CASE("berndt_kim limits approach 1/2 monotonically") {
  for (long bnum : {1L, -1L}) {
    BigReal prev_gap(P);
    bool first = true;
    for (long e = 1; e <= 3; ++e) {
      BigReal y = R(1);
      for (long i = 0; i < e; ++i) y /= R(10);
      const BerndtKim r = berndt_kim(mpq_class(3, 2), mpq_class(bnum, 2), y, 1);
      const BigReal gap = abs(r.lhs - Q(1, 2));
      if (!first) CHECK(gap < prev_gap);
      prev_gap = gap;
      first = false;
    }
    CHECK(prev_gap < Q(1, 1000));
  }
}

TEST_CASE("berndt_kim one-term rhs") {
  const BigReal y = Q(1, 1000);
  const BerndtKim r = berndt_kim(mpq_class(3, 2), mpq_class(1, 2), y, 1);
  CHECK(agree_digits(r.rhs, exp(y / R(8)) / R(2), 70));
  // Error shrinks by at least sqrt(2) when y halves.
  const BerndtKim h = berndt_kim(mpq_class(3, 2), mpq_class(1, 2), y / R(2), 1);
  CHECK(abs(h.lhs - h.rhs) * sqrt(R(2)) <= abs(r.lhs - r.rhs));
  CHECK_THROWS_AS(berndt_kim(mpq_class(3, 2), mpq_class(1, 2), R(0), 1), UsageError);
}

TEST_CASE("alternating sum matches the Euler-polynomial expansion") {
  for (long bnum : {1L, -1L}) {
    const mpq_class a(3, 2);
    const mpq_class b(bnum, 2);
    for (unsigned M : {1U, 2U, 3U}) {
      BigReal y = Q(1, 10);
      BigReal worst(P);
      for (int k = 0; k < 10; ++k) {
        const BerndtKim r = berndt_kim(a, b, y, 1);
        const BigReal scaled = abs(r.lhs - alternating_oracle(a, b, y, M)) /
                               pow(y, BigReal(static_cast<long>(M + 1), P));
        if (scaled > worst) worst = scaled;
        y /= R(2);
      }
      INFO("b=" << bnum << "/2 M=" << M << " worst=" << worst.to_string(6));
      CHECK(worst < R(10));
    }
  }
}

TEST_CASE("eta asymptotics") {
  const BigReal d1 = eta_asym_deviation(Q(1, 2));
  const BigReal d2 = eta_asym_deviation(Q(1, 8));
  CHECK(abs(d2) < abs(d1));
  // The transformation law leaves exactly -y/24 up to e^{-4 pi^2 / y}.
  CHECK(agree_digits(d1, -Q(1, 48), 30));
  CHECK(eta_asym_deviation(R(10)) < R(0));
  CHECK(agree_digits(squared_quotient_limit(Q(1, 100)), exp(Q(1, 100) / R(12)), 40));
  CHECK(abs(squared_quotient_limit(Q(1, 1000)) - R(1)) < abs(squared_quotient_limit(Q(1, 100)) - R(1)));
}

TEST_CASE("ratio_report") {
  const auto rows = ratio_report(Sequence::sigma, {1000, 100, 10});
  REQUIRE(rows.size() == 3);
  CHECK(rows[0].n == 10);
  for (const auto& r : rows) {
    CHECK(r.odd_even_ratio.has_value());
    CHECK(agree_digits(r.ratio * r.main_term, BigReal(r.coefficient, P), 70));
  }
  const MexSeries g = g_series(1000);
  const auto odd = ratio_report(Sequence::sigma_o, g, {1000});
  const auto even = ratio_report(Sequence::sigma_e, g, {1000});
  // (odd + even) / (2 M) is the average of the two half-ratios.
  CHECK(agree_digits(rows[2].ratio, (odd[0].ratio + even[0].ratio) / R(2), 70));
  CHECK(odd[0].coefficient == g.odd[1000]);
  CHECK(ratio_csv(odd).rfind("n,coefficient,main_term,ratio\n1000,", 0) == 0);
  CHECK_THROWS_AS(ratio_report(Sequence::sigma_o, g, {0}), UsageError);
  CHECK_THROWS_AS(ratio_report(Sequence::sigma_o, g, {1001}), UsageError);
}

TEST_CASE("BigReal conversions keep the integer's leading bits") {
  const mpz_class big = (mpz_class(1) << 400) + 12345;
  const BigReal r(big, P);
  CHECK(r == exp2i(400, P));
  CHECK(BigReal(big, 512) > exp2i(400, 512));
  CHECK(Q(1, 3).to_string(5) == "3.3333e-01");
}
