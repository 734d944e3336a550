#include "mexlab/mex_series.hpp"

#include <algorithm>
#include <sstream>

#include "mexlab/kernels.hpp"

namespace mexlab {

std::string_view sequence_name(Sequence s) {
  switch (s) {
    case Sequence::sigma_o: return "sigma_o";
    case Sequence::sigma_e: return "sigma_e";
    case Sequence::sigma: return "sigma";
    case Sequence::a: return "a";
  }
  return "?";
}

Sequence parse_sequence(std::string_view name) {
  if (name == "sigma_o" || name == "G_o") return Sequence::sigma_o;
  if (name == "sigma_e" || name == "G_e") return Sequence::sigma_e;
  if (name == "sigma") return Sequence::sigma;
  if (name == "a" || name == "f1sq") return Sequence::a;
  throw UsageError("unknown sequence '" + std::string(name) + "'");
}

TruncSeries sigma_series(std::size_t order) {
  const TruncSeries f1 = pochhammer(1, order);
  const TruncSeries f2 = pochhammer(2, order);
  // Two sparse divisions and two sparse products; never a dense square.
  const TruncSeries inv_f1sq = divide(divide(one(order), f1), f1);
  return mul(mul(inv_f1sq, f2), f2);
}

TruncSeries f1sq_series(std::size_t order) {
  const TruncSeries f1 = pochhammer(1, order);
  return mul(f1, f1);
}

MexSeries g_series(std::size_t order) {
  const TruncSeries s = sigma_series(order);
  const TruncSeries a = f1sq_series(order);
  return {halve(add(s, a)), halve(sub(s, a))};
}

TruncSeries sequence_series(Sequence s, std::size_t order) {
  switch (s) {
    case Sequence::sigma_o: return g_series(order).odd;
    case Sequence::sigma_e: return g_series(order).even;
    case Sequence::sigma: return sigma_series(order);
    case Sequence::a: return f1sq_series(order);
  }
  throw UsageError("unknown sequence");
}

std::string describe(const CongruenceTarget& t) {
  std::ostringstream os;
  os << sequence_name(t.sequence) << '(' << t.m << 'n';
  if (t.r != 0) os << '+' << t.r;
  os << ") == 0 mod " << t.modulus;
  if (!t.label.empty()) os << " [" << t.label << ']';
  return os.str();
}

Verdict check_congruence(const TruncSeries& series, const CongruenceTarget& t) {
  if (t.m == 0 || t.r >= t.m) throw UsageError("check_congruence: need 0 <= r < m");
  if (t.modulus < 2) throw UsageError("check_congruence: modulus must be at least 2");
  if (series.order() < t.r) throw UsageError("check_congruence: series order below residue");
  const std::string claim = describe(t);
  std::uint64_t checked = 0;
  for (std::uint64_t n = 0;; ++n) {
    const std::uint64_t idx = t.m * n + t.r;
    if (idx > series.order()) break;
    ++checked;
    if (mpz_divisible_ui_p(series[idx].get_mpz_t(), t.modulus) == 0) {
      return Verdict::failed(claim, checked, n, series[idx]);
    }
  }
  return Verdict::passed(claim, checked);
}

std::vector<CongruenceTarget> fixed_congruences() {
  using S = Sequence;
  return {
      {2, 1, 4, "classical", S::sigma_o},   {4, 1, 8, "classical", S::sigma_o},
      {4, 0, 4, "classical", S::sigma_e},   {8, 1, 16, "mod 2^k", S::sigma_o},
      {8, 0, 8, "mod 2^k", S::sigma_e},     {10, 6, 4, "mod-5 dissection", S::sigma_e},
      {10, 8, 4, "mod-5 dissection", S::sigma_e},
  };
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<std::uint64_t> admissible_ks(std::uint64_t p, int part) {
  if (!is_prime(p)) throw InvalidFamily("p = " + std::to_string(p) + " is not prime");
  std::vector<std::uint64_t> ks;
  switch (part) {
    case 1: {
      const auto c = p % 12;
      if (c != 5 && c != 7 && c != 11) {
        throw InvalidFamily("part 1 needs p = 5, 7, 11 (mod 12); p = " + std::to_string(p) +
                            " is " + std::to_string(c) + " (mod 12)");
      }
      for (std::uint64_t k = 1; k < p; k += 2) ks.push_back(k);
      break;
    }
    case 2:
    case 3: {
      const auto c = p % 24;
      if (c != 5 && c != 7 && c != 11) {
        throw InvalidFamily("part " + std::to_string(part) +
                            " needs p = 5, 7, 11 (mod 24); p = " + std::to_string(p) + " is " +
                            std::to_string(c) + " (mod 24)");
      }
      std::uint64_t want = 0;
      if (part == 2) {
        want = (c == 11) ? 1 : 3;
      } else {
        want = (c == 7) ? 2 : 0;
      }
      for (std::uint64_t k = 1; k < p; ++k) {
        if (k % 4 == want) ks.push_back(k);
      }
      break;
    }
    default:
      throw InvalidFamily("family part must be 1, 2 or 3");
  }
  return ks;
}

std::vector<CongruenceTarget> family_targets(const FamilyParams& f) {
  const auto allowed = admissible_ks(f.p, f.part);
  std::vector<std::uint64_t> ks = f.ks.empty() ? allowed : f.ks;
  for (std::uint64_t k : ks) {
    if (std::find(allowed.begin(), allowed.end(), k) == allowed.end()) {
      std::string why;
      if (k == 0 || k >= f.p) {
        why = "need 1 <= k < p";
      } else if (f.part == 1) {
        why = "part 1 needs k odd";
      } else {
        why = "part " + std::to_string(f.part) + " needs k = " + std::to_string(allowed.front() % 4) +
              " (mod 4) for p = " + std::to_string(f.p % 24) + " (mod 24)";
      }
      throw InvalidFamily("k = " + std::to_string(k) + " inadmissible: " + why);
    }
  }

  const std::uint64_t p2 = f.p * f.p;
  const std::uint64_t base = (p2 - 1) / 12;
  std::vector<CongruenceTarget> out;
  for (std::uint64_t k : ks) {
    CongruenceTarget t;
    t.r = k * f.p + base;
    switch (f.part) {
      case 1: t.m = 2 * p2; t.modulus = 4; t.sequence = Sequence::sigma_e; break;
      case 2: t.m = 4 * p2; t.modulus = 8; t.sequence = Sequence::sigma_e; break;
      default: t.m = 4 * p2; t.modulus = 4; t.sequence = Sequence::sigma_o; break;
    }
    t.label = "p=" + std::to_string(f.p) + " part " + std::to_string(f.part) +
              " k=" + std::to_string(k);
    out.push_back(std::move(t));
  }
  return out;
}

std::size_t family_order(std::uint64_t p) { return static_cast<std::size_t>(4 * p * p * 50); }

int cooper_epsilon(std::uint64_t p) {
  const auto c = p % 12;
  if (!is_prime(p) || (c != 5 && c != 7 && c != 11)) {
    throw InvalidPrime("p = " + std::to_string(p) + " is not a prime = 5, 7, 11 (mod 12)");
  }
  return c == 5 ? -1 : 1;
}

Verdict cooper_check(std::uint64_t p, std::size_t order) {
  cooper_epsilon(p);
  return cooper_check(p, f1sq_series(order));
}

Verdict cooper_check(std::uint64_t p, const TruncSeries& a) {
  const int eps = cooper_epsilon(p);
  const std::uint64_t c = (p * p - 1) / 12;
  const std::size_t order = a.order();
  const std::string tag = " [p=" + std::to_string(p) + ", eps=" + std::to_string(eps) + "]";
  std::uint64_t checked = 0;

  // a(p n + c) = eps a(n / p), with a(n / p) = 0 off multiples of p.
  const std::string lemma = "a(p n + (p^2-1)/12) == eps a(n/p)" + tag;
  for (std::uint64_t n = 0; p * n + c <= order; ++n) {
    ++checked;
    mpz_class expected = 0;
    if (n % p == 0) expected = eps * a[n / p];
    if (a[p * n + c] != expected) return Verdict::failed(lemma, checked, n, a[p * n + c]);
  }

  // Consequence: a(p^2 n + p k + c) = 0 for 1 <= k < p. Counterexamples carry
  // the coefficient index.
  const std::string vanish = "a(p^2 n + p k + (p^2-1)/12) == 0" + tag;
  for (std::uint64_t k = 1; k < p; ++k) {
    for (std::uint64_t idx = p * k + c; idx <= order; idx += p * p) {
      ++checked;
      if (sgn(a[idx]) != 0) return Verdict::failed(vanish, checked, idx, a[idx]);
    }
  }
  return Verdict::passed(lemma + " and vanishing", checked);
}

Verdict progression_equality_check(const MexSeries& g, std::uint64_t p) {
  cooper_epsilon(p);
  if (g.odd.order() != g.even.order()) throw UsageError("progression check: order mismatch");
  const std::uint64_t c = (p * p - 1) / 12;
  const std::string claim =
      "sigma_o == sigma_e on p^2 n + p k + (p^2-1)/12 [p=" + std::to_string(p) + "]";
  std::uint64_t checked = 0;
  // Scan indices ascending so the reported counterexample is the smallest.
  for (std::uint64_t idx = c + p; idx <= g.odd.order(); idx += p) {
    if ((idx - c) % (p * p) == 0) continue;
    ++checked;
    if (g.odd[idx] != g.even[idx]) return Verdict::failed(claim, checked, idx, g.odd[idx] - g.even[idx]);
  }
  return Verdict::passed(claim, checked);
}

std::vector<DensityPoint> density_scan(const TruncSeries& series, const mpz_class& modulus,
                                       std::vector<std::size_t> checkpoints) {
  if (modulus < 2) throw UsageError("density_scan: modulus must be at least 2");
  std::sort(checkpoints.begin(), checkpoints.end());
  checkpoints.erase(std::unique(checkpoints.begin(), checkpoints.end()), checkpoints.end());
  if (checkpoints.empty()) return {};
  if (checkpoints.front() == 0) throw UsageError("density_scan: checkpoints must be positive");
  if (checkpoints.back() > series.order()) {
    throw UsageError("density_scan: checkpoint " + std::to_string(checkpoints.back()) +
                     " exceeds series order " + std::to_string(series.order()));
  }
  std::vector<DensityPoint> out;
  std::size_t zeros = 0;
  std::size_t done = 0;
  for (std::size_t x : checkpoints) {
    zeros += kernels::count_divisible(series.coeffs(), modulus, done + 1, x);
    done = x;
    mpq_class delta(static_cast<unsigned long>(zeros), static_cast<unsigned long>(x));
    delta.canonicalize();
    out.push_back({x, std::move(delta)});
  }
  return out;
}

}  // namespace mexlab
