#include "mexlab/asymptotics.hpp"

#include <algorithm>
#include <sstream>

#include "mexlab/errors.hpp"

namespace mexlab {

namespace {

BigReal from_u64(std::uint64_t n, mpfr_prec_t prec) {
  return BigReal(mpz_class(static_cast<unsigned long>(n)), prec);
}

}  // namespace

AsymptoticSpec mex_half_spec(mpfr_prec_t prec) {
  const BigReal p = pi(prec);
  return {BigReal(mpq_class(1, 4), prec), BigReal(prec), p * p / BigReal(6L, prec),
          "G_o(e^-y), G_e(e^-y) ~ (1/4) e^{pi^2/(6y)}"};
}

BigReal ingham_main_term(const AsymptoticSpec& spec, std::uint64_t n) {
  if (spec.lambda <= BigReal(spec.lambda.precision())) throw UsageError("ingham: lambda must be positive");
  if (n == 0) throw UsageError("ingham: n must be positive");
  const mpfr_prec_t prec = std::max({spec.mu.precision(), spec.nu.precision(), spec.lambda.precision()});
  const BigReal one(1L, prec);
  const BigReal two(2L, prec);
  const BigReal three(3L, prec);
  const BigReal four(4L, prec);
  const BigReal nn = from_u64(n, prec);
  const BigReal lead = spec.mu / (two * sqrt(pi(prec)));
  const BigReal lam = pow(spec.lambda, (two * spec.nu + one) / four);
  const BigReal den = pow(nn, (two * spec.nu + three) / four);
  return lead * lam / den * exp(two * sqrt(spec.lambda * nn));
}

BigReal mex_half_main_term(std::uint64_t n, mpfr_prec_t prec) {
  if (n == 0) throw UsageError("main term: n must be positive");
  const BigReal nn = from_u64(n, prec);
  const BigReal growth = exp(pi(prec) * sqrt(BigReal(2L, prec) * nn / BigReal(3L, prec)));
  const BigReal root4 = sqrt(sqrt(BigReal(6L, prec) * nn * nn * nn));
  return growth / (BigReal(8L, prec) * root4);
}

BigReal sigma_main_term(std::uint64_t n, mpfr_prec_t prec) {
  return mex_half_main_term(n, prec) * BigReal(2L, prec);
}

mpz_class euler_number(unsigned index) {
  if (index % 2) throw UsageError("euler_number: index must be even");
  const unsigned m = index / 2;
  std::vector<mpz_class> e(m + 1);
  e[0] = 1;
  for (unsigned k = 1; k <= m; ++k) {
    mpz_class acc = 0;
    for (unsigned j = 0; j < k; ++j) {
      mpz_class c;
      mpz_bin_uiui(c.get_mpz_t(), 2 * k, 2 * j);
      acc += c * e[j];
    }
    e[k] = -acc;
  }
  return e[m];
}

BigReal hermite(unsigned n, const BigReal& x) {
  const mpfr_prec_t prec = x.precision();
  BigReal h0(1L, prec);
  if (n == 0) return h0;
  const BigReal two_x = BigReal(2L, prec) * x;
  BigReal h1 = two_x;
  for (unsigned k = 1; k < n; ++k) {
    BigReal next = two_x * h1 - BigReal(static_cast<long>(2 * k), prec) * h0;
    h0 = std::move(h1);
    h1 = std::move(next);
  }
  return h1;
}

BerndtKim berndt_kim(const mpq_class& a, const mpq_class& b, const BigReal& y, unsigned terms,
                     std::uint64_t max_terms) {
  const mpfr_prec_t prec = y.precision();
  if (a <= 0) throw UsageError("berndt_kim: a must be positive");
  if (y <= BigReal(prec)) throw UsageError("berndt_kim: y must be positive");
  if (terms == 0) throw UsageError("berndt_kim: need at least one term");

  BigReal lhs(prec);
  const BigReal eps = exp2i(-prec, prec);
  for (std::uint64_t n = 0; n < max_terms; ++n) {
    const mpq_class e = a * n * n + b * n;
    const BigReal term = exp(-(BigReal(e, prec) * y));
    if (n % 2) lhs -= term;
    else lhs += term;
    if (n > 0 && a * n + b > 0 && term < eps) break;
  }

  const BigReal sqrt_a = sqrt(BigReal(a, prec));
  const BigReal x = BigReal(mpq_class(b - a), prec) * sqrt(y) / (BigReal(2L, prec) * sqrt_a);
  BigReal sum(prec);
  BigReal y_pow(1L, prec);
  mpz_class fact = 1;  // (2n)!
  mpq_class a_pow = 1;
  for (unsigned n = 0; n < terms; ++n) {
    if (n > 0) {
      fact *= mpz_class(2 * n - 1) * (2 * n);
      a_pow *= a;
      y_pow *= y;
    }
    const mpq_class coef = mpq_class(euler_number(2 * n) * a_pow.get_num(),
                                     a_pow.get_den() * fact * (mpz_class(1) << (2 * n + 1)));
    sum += BigReal(coef, prec) * y_pow * hermite(2 * n, x);
  }
  const BigReal pre = exp(BigReal(mpq_class((a - 2 * b) / 4), prec) * y);
  return {lhs, pre * sum};
}

namespace {

// sum_{j>=1} log(1 + sign e^{-jy}), stopping once e^{-jy} < 2^{-prec}.
BigReal log_product(const BigReal& y, int sign, std::uint64_t max_terms) {
  const mpfr_prec_t prec = y.precision();
  const BigReal q = exp(-y);
  const BigReal eps = exp2i(-prec - 8, prec);
  BigReal qj = q;
  BigReal total(prec);
  for (std::uint64_t j = 1; j <= max_terms && qj >= eps; ++j) {
    total += log1p(sign < 0 ? -qj : qj);
    qj *= q;
  }
  return total;
}

}  // namespace

BigReal eta_asym_deviation(const BigReal& y, std::uint64_t max_terms) {
  const mpfr_prec_t prec = y.precision();
  if (y <= BigReal(prec)) throw UsageError("eta_asym_deviation: y must be positive");
  const BigReal p = pi(prec);
  const BigReal log_inv = -log_product(y, -1, max_terms);
  return log_inv - p * p / (BigReal(6L, prec) * y) -
         log(y / (BigReal(2L, prec) * p)) / BigReal(2L, prec);
}

BigReal squared_quotient_limit(const BigReal& y, std::uint64_t max_terms) {
  const mpfr_prec_t prec = y.precision();
  if (y <= BigReal(prec)) throw UsageError("squared_quotient_limit: y must be positive");
  const BigReal p = pi(prec);
  const BigReal two(2L, prec);
  return two * exp(two * log_product(y, 1, max_terms) - p * p / (BigReal(6L, prec) * y));
}

std::vector<RatioRow> ratio_report(Sequence which, const MexSeries& g,
                                   const std::vector<std::uint64_t>& checkpoints, mpfr_prec_t prec) {
  if (which == Sequence::a) throw UsageError("ratio_report: expected sigma_o, sigma_e or sigma");
  std::vector<std::uint64_t> xs = checkpoints;
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  std::vector<RatioRow> rows;
  for (std::uint64_t n : xs) {
    if (n == 0 || n > g.odd.order()) throw UsageError("ratio_report: checkpoint out of range");
    const mpz_class& odd = g.odd[n];
    const mpz_class& even = g.even[n];
    mpz_class c;
    BigReal main(prec);
    std::optional<BigReal> oe;
    switch (which) {
      case Sequence::sigma_o: c = odd; main = mex_half_main_term(n, prec); break;
      case Sequence::sigma_e: c = even; main = mex_half_main_term(n, prec); break;
      default:
        c = odd + even;
        main = sigma_main_term(n, prec);
        oe = BigReal(odd, prec) / BigReal(even, prec);
        break;
    }
    BigReal ratio = BigReal(c, prec) / main;
    rows.push_back({n, std::move(c), std::move(main), std::move(ratio), std::move(oe)});
  }
  return rows;
}

std::vector<RatioRow> ratio_report(Sequence which, const std::vector<std::uint64_t>& checkpoints,
                                   mpfr_prec_t prec) {
  const std::uint64_t top = checkpoints.empty() ? 0 : *std::max_element(checkpoints.begin(), checkpoints.end());
  return ratio_report(which, g_series(top), checkpoints, prec);
}

std::string ratio_csv(const std::vector<RatioRow>& rows, int digits) {
  const bool with_oe = !rows.empty() && rows.front().odd_even_ratio.has_value();
  std::ostringstream out;
  out << "n,coefficient,main_term,ratio" << (with_oe ? ",odd_even_ratio" : "") << '\n';
  for (const auto& r : rows) {
    out << r.n << ',' << r.coefficient.get_str() << ',' << r.main_term.to_string(digits) << ','
        << r.ratio.to_string(digits);
    if (with_oe) out << ',' << r.odd_even_ratio->to_string(digits);
    out << '\n';
  }
  return out.str();
}

}  // namespace mexlab
