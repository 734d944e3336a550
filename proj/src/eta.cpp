#include "mexlab/eta.hpp"

#include <numeric>
#include <sstream>

#include "mexlab/errors.hpp"
#include "mexlab/mex_series.hpp"

namespace mexlab {

namespace {

mpq_class canonical(const mpq_class& q) {
  mpq_class c = q;
  c.canonicalize();
  return c;
}

std::string num_den(const mpq_class& q) {
  const mpq_class c = canonical(q);
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

// (a / n) for odd n > 0, a >= 0.
int jacobi(unsigned long long a, unsigned long long n) {
  a %= n;
  int t = 1;
  while (a != 0) {
    while (a % 2 == 0) {
      a /= 2;
      const unsigned long long r = n % 8;
      if (r == 3 || r == 5) t = -t;
    }
    std::swap(a, n);
    if (a % 4 == 3 && n % 4 == 3) t = -t;
    a %= n;
  }
  return n == 1 ? t : 0;
}

// (a / 2) for the Kronecker symbol.
int kronecker_two(unsigned long long a_mod8) {
  if (a_mod8 % 2 == 0) return 0;
  return (a_mod8 == 1 || a_mod8 == 7) ? 1 : -1;
}

std::uint64_t gcd(std::uint64_t a, std::uint64_t b) { return std::gcd(a, b); }

}  // namespace

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  std::vector<std::uint64_t> small;
  std::vector<std::uint64_t> large;
  for (std::uint64_t i = 1; i * i <= n; ++i) {
    if (n % i) continue;
    small.push_back(i);
    if (i != n / i) large.push_back(n / i);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

EtaQuotient make_eta_quotient(std::uint64_t level, std::map<std::uint64_t, long> exponents) {
  if (level == 0) throw UsageError("eta quotient level must be positive");
  bool any = false;
  for (auto it = exponents.begin(); it != exponents.end();) {
    if (it->first == 0 || level % it->first != 0) {
      throw UsageError("eta quotient: " + std::to_string(it->first) + " does not divide level " +
                       std::to_string(level));
    }
    if (it->second == 0) {
      it = exponents.erase(it);
    } else {
      any = true;
      ++it;
    }
  }
  if (!any) throw UsageError("eta quotient needs a nonzero exponent");
  return {level, std::move(exponents)};
}

mpq_class weight(const EtaQuotient& e) {
  mpz_class total = 0;
  for (const auto& [d, r] : e.exponents) total += r;
  return canonical(mpq_class(total, 2));
}

LigozatConditions ligozat_conditions(const EtaQuotient& e) {
  LigozatConditions c;
  for (const auto& [d, r] : e.exponents) {
    c.sum_a += mpz_class(r) * d;
    c.sum_b += mpz_class(r) * (e.level / d);
  }
  const mpq_class w = weight(e);
  c.ok = c.sum_a % 24 == 0 && c.sum_b % 24 == 0 && w.get_den() == 1 && w > 0;
  return c;
}

int kronecker(long long a, long long n) { return kronecker(mpz_class(static_cast<long>(a)), n); }

int kronecker(const mpz_class& a, long long n) {
  if (n == 0) return (a == 1 || a == -1) ? 1 : 0;
  int t = (n < 0 && sgn(a) < 0) ? -1 : 1;
  unsigned long un = n < 0 ? 0UL - static_cast<unsigned long>(n) : static_cast<unsigned long>(n);
  // Only a mod 8 (for the factors of 2) and a mod the odd part matter.
  const unsigned long a8 = mpz_fdiv_ui(a.get_mpz_t(), 8);
  while (un % 2 == 0) {
    un /= 2;
    t *= kronecker_two(a8);
    if (t == 0) return 0;
  }
  return t * jacobi(mpz_fdiv_ui(a.get_mpz_t(), un), un);
}

mpz_class s_abs(const EtaQuotient& e) {
  mpz_class s = 1;
  for (const auto& [d, r] : e.exponents) {
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), d, static_cast<unsigned long>(r < 0 ? -r : r));
    s *= p;
  }
  return s;
}

namespace {

mpz_class integral_weight(const EtaQuotient& e) {
  const mpq_class w = weight(e);
  if (w.get_den() != 1) throw NotIntegralWeight();
  return w.get_num();
}

}  // namespace

int character(const EtaQuotient& e, long long d) {
  const mpz_class l = integral_weight(e);
  const unsigned long long ud = d < 0 ? 0ULL - static_cast<unsigned long long>(d) : d;
  if (gcd(ud, e.level) != 1) throw UsageError("character: d must be coprime to the level");
  mpz_class a = s_abs(e);
  if (mpz_odd_p(l.get_mpz_t())) a = -a;
  return kronecker(a, d);
}

std::string character_descriptor(const EtaQuotient& e) {
  const mpz_class l = integral_weight(e);
  // Squarefree part from the prime factorization of each delta.
  std::map<std::uint64_t, unsigned long> primes;
  for (const auto& [d, r] : e.exponents) {
    std::uint64_t x = d;
    const unsigned long mult = static_cast<unsigned long>(r < 0 ? -r : r);
    for (std::uint64_t p = 2; p * p <= x; ++p) {
      while (x % p == 0) {
        primes[p] += mult;
        x /= p;
      }
    }
    if (x > 1) primes[x] += mult;
  }
  mpz_class core = mpz_odd_p(l.get_mpz_t()) ? -1 : 1;
  for (const auto& [p, k] : primes) {
    if (k % 2) core *= p;
  }
  if (core == 1) return "chi_0";
  return "(" + core.get_str() + "/.)";
}

mpq_class cusp_order(const EtaQuotient& e, std::uint64_t d) {
  if (d == 0 || e.level % d != 0) throw UsageError("cusp_order: d must divide the level");
  const std::uint64_t g = gcd(d, e.level / d);
  mpq_class total = 0;
  for (const auto& [delta, r] : e.exponents) {
    const std::uint64_t gd = gcd(d, delta);
    total += mpq_class(mpz_class(gd * gd) * r, mpz_class(g) * d * delta);
  }
  return canonical(total * mpq_class(e.level, 24));
}

mpz_class s_value(unsigned k, std::uint64_t d) {
  if (d == 0 || 288 % d != 0) throw UsageError("s_value: d must divide 288");
  if (k < 1) throw UsageError("s_value: k must be at least 1");
  const mpz_class g12 = gcd(d, 12);
  const mpz_class g24 = gcd(d, 24);
  const mpz_class two_k1 = mpz_class(1) << (k + 1);
  const mpz_class two_km1 = mpz_class(1) << (k - 1);
  return g12 * g12 * (two_k1 - 2) + g24 * g24 * (1 - two_km1);
}

HolomorphyReport is_holomorphic_modular_form(const EtaQuotient& e) {
  HolomorphyReport rep;
  rep.weight = weight(e);
  rep.level = e.level;
  rep.conditions = ligozat_conditions(e);
  rep.character_descriptor = rep.weight.get_den() == 1 ? character_descriptor(e) : "undefined";
  for (std::uint64_t d : divisors(e.level)) {
    if (cusp_order(e, d) < 0) {
      rep.failing_cusp = d;
      break;
    }
  }
  rep.ok = rep.conditions.ok && !rep.failing_cusp;
  return rep;
}

EtaQuotient build_A_k(unsigned k) {
  if (k < 1) throw UsageError("A_k requires k >= 1 (k = 0 breaks the level-288 conditions)");
  if (k > 60) throw UsageError("A_k: k too large");
  const long a = (1L << (k + 1)) - 2;
  const long b = (1L << k) - 2;
  std::map<std::uint64_t, long> ex;
  if (a != 0) ex[12] = a;
  if (b != 0) ex[24] = -b;
  return make_eta_quotient(288, std::move(ex));
}

EtaQuotient build_B_star() { return make_eta_quotient(144, {{12, 2}}); }

TruncSeries eta_expand(const EtaQuotient& e, std::size_t order) {
  const LigozatConditions c = ligozat_conditions(e);
  if (c.sum_a % 24 != 0) throw UsageError("eta_expand: sum delta r_delta is not divisible by 24");
  if (c.sum_a < 0) throw UsageError("eta_expand: negative leading exponent");
  const std::size_t lead = c.sum_a.get_ui() / 24;
  if (lead > order) return TruncSeries(order);
  TruncSeries num = one(order);
  TruncSeries den = one(order);
  for (const auto& [d, r] : e.exponents) {
    const TruncSeries f = pochhammer(d, order);
    if (r > 0) num = mul(num, power(f, r));
    else den = mul(den, power(f, -r));
  }
  return shift(divide(num, den), lead);
}

Verdict congruence_witness(unsigned k, std::size_t order) {
  const EtaQuotient ak = build_A_k(k);
  const mpz_class mod = mpz_class(1) << (k + 1);
  const std::string claim = "A_" + std::to_string(k) + " = A* (mod " + mod.get_str() + ")";

  const TruncSeries alpha = sigma_series(order / 12);
  const TruncSeries a_star = shift(substitute_power(alpha, 12, order), 1);
  const TruncSeries a_k = eta_expand(ak, order);
  const TruncSeries diff = sub(a_k, a_star);
  const TruncSeries red = reduce_mod(diff, mod);
  for (std::size_t i = 0; i <= order; ++i) {
    if (red[i] != 0) return Verdict::failed(claim, i + 1, i, diff[i]);
  }

  const long a = 1L << (k + 1);
  const long b = 1L << k;
  const TruncSeries aux = eta_expand(make_eta_quotient(288, {{12, a}, {24, -b}}), order);
  const TruncSeries aux_diff = sub(aux, one(order));
  const TruncSeries aux_red = reduce_mod(aux_diff, mod);
  const std::string both = claim + "; eta^" + std::to_string(a) + "(12z)/eta^" + std::to_string(b) +
                           "(24z) = 1 (mod " + mod.get_str() + ")";
  for (std::size_t i = 0; i <= order; ++i) {
    if (aux_red[i] != 0) return Verdict::failed(both, order + 1 + i + 1, i, aux_diff[i]);
  }
  return Verdict::passed(both, 2 * (order + 1));
}

std::vector<STableRow> s_table(unsigned k) {
  const EtaQuotient ak = build_A_k(k);
  std::vector<STableRow> rows;
  for (std::uint64_t d : divisors(288)) {
    rows.push_back({d, gcd(d, 12), gcd(d, 24), s_value(k, d), cusp_order(ak, d)});
  }
  return rows;
}

std::string s_table_csv(const std::vector<STableRow>& rows) {
  std::ostringstream out;
  out << "d,gcd(d,12),gcd(d,24),S,cusp_order\n";
  for (const auto& r : rows) {
    out << r.d << ',' << r.gcd12 << ',' << r.gcd24 << ',' << r.s.get_str() << ','
        << num_den(r.cusp_order) << '\n';
  }
  return out.str();
}

}  // namespace mexlab
