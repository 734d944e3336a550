#include "mexlab/theta.hpp"

#include <string>
#include <utility>

#include "mexlab/errors.hpp"
#include "mexlab/mex_series.hpp"

namespace mexlab {

namespace {

void require_equal(const std::string& id, const TruncSeries& a, const TruncSeries& b) {
  for (std::size_t i = 0; i <= a.order(); ++i) {
    if (a[i] != b[i]) throw IdentityViolation(id, i);
  }
}

TruncSeries f(std::size_t m, std::size_t n) { return pochhammer(m, n); }

TruncSeries phi_eta(std::size_t n) {
  const TruncSeries f1 = f(1, n);
  const TruncSeries f4 = f(4, n);
  return divide(power(f(2, n), 5), mul(mul(f1, f1), mul(f4, f4)));
}

TruncSeries psi_eta(std::size_t n) { return divide(mul(f(2, n), f(2, n)), f(1, n)); }

TruncSeries phi_neg_eta(std::size_t n) { return divide(mul(f(1, n), f(1, n)), f(2, n)); }

}  // namespace

TruncSeries phi_direct(std::size_t order) {
  std::vector<mpz_class> c(order + 1);
  c[0] = 1;
  for (std::size_t k = 1; k * k <= order; ++k) c[k * k] = 2;
  return TruncSeries(std::move(c));
}

TruncSeries psi_direct(std::size_t order) {
  std::vector<mpz_class> c(order + 1);
  for (std::size_t k = 0; k * (k + 1) / 2 <= order; ++k) c[k * (k + 1) / 2] = 1;
  return TruncSeries(std::move(c));
}

TruncSeries phi_neg_direct(std::size_t order) {
  std::vector<mpz_class> c(order + 1);
  c[0] = 1;
  for (std::size_t k = 1; k * k <= order; ++k) c[k * k] = (k % 2) ? -2 : 2;
  return TruncSeries(std::move(c));
}

TruncSeries phi_series(std::size_t order) {
  TruncSeries s = phi_direct(order);
  require_equal("phi-eta", s, phi_eta(order));
  return s;
}

TruncSeries psi_series(std::size_t order) {
  TruncSeries s = psi_direct(order);
  require_equal("psi-eta", s, psi_eta(order));
  return s;
}

TruncSeries phi_neg_series(std::size_t order) {
  TruncSeries s = phi_neg_direct(order);
  require_equal("phi-neg-eta", s, phi_neg_eta(order));
  return s;
}

// q^n / (1 + q^{2n}) = sum_{j>=0} (-1)^j q^{n(2j+1)}
TruncSeries lambert_one_plus_q2n(std::size_t order, const std::function<long(std::size_t)>& w) {
  std::vector<mpz_class> c(order + 1);
  for (std::size_t n = 1; n <= order; ++n) {
    const long wn = w(n);
    if (wn == 0) continue;
    long sign = 1;
    for (std::size_t e = n; e <= order; e += 2 * n) {
      c[e] += sign * wn;
      sign = -sign;
    }
  }
  return TruncSeries(std::move(c));
}

// q^n / (1 - q^n)^2 = sum_{j>=1} j q^{nj}
TruncSeries lambert_one_minus_qn_sq(std::size_t order, const std::function<long(std::size_t)>& w) {
  std::vector<mpz_class> c(order + 1);
  for (std::size_t n = 1; n <= order; ++n) {
    const long wn = w(n);
    if (wn == 0) continue;
    long j = 1;
    for (std::size_t e = n; e <= order; e += n, ++j) c[e] += wn * j;
  }
  return TruncSeries(std::move(c));
}

int legendre5(std::size_t n) {
  switch (n % 5) {
    case 0: return 0;
    case 1:
    case 4: return 1;
    default: return -1;
  }
}

TruncSeries lambert_phi2(std::size_t order) {
  TruncSeries s = add(one(order), scale(lambert_one_plus_q2n(order, [](std::size_t) { return 1L; }), 4));
  const TruncSeries phi = phi_series(order);
  require_equal("phi-squared-lambert", s, mul(phi, phi));
  return s;
}

TruncSeries lambert_legendre5(std::size_t order) {
  TruncSeries s = lambert_one_minus_qn_sq(order, [](std::size_t n) { return long{legendre5(n)}; });
  const TruncSeries rhs = shift(divide(power(f(5, order), 5), f(1, order)), 1);
  require_equal("legendre5-lambert", s, rhs);
  const TruncSeries restricted =
      lambert_one_plus_q2n(order, [](std::size_t n) { return n % 5 ? 1L : 0L; });
  require_equal("restricted-lambert-mod2", reduce_mod(restricted, 2), reduce_mod(rhs, 2));
  return s;
}

Verdict binomial_lemma_check(std::size_t m, unsigned k, std::size_t order) {
  if (m == 0 || k == 0 || k > 20) throw UsageError("binomial_lemma_check: need m >= 1, 1 <= k <= 20");
  const mpz_class mod = mpz_class(1) << k;
  const TruncSeries lhs = power(f(m, order), 1L << k);
  const TruncSeries rhs = power(f(2 * m, order), 1L << (k - 1));
  const TruncSeries diff = reduce_mod(sub(lhs, rhs), mod);
  const std::string claim = "f" + std::to_string(m) + "^" + std::to_string(1UL << k) + " = f" +
                            std::to_string(2 * m) + "^" + std::to_string(1UL << (k - 1)) +
                            " (mod " + mod.get_str() + ")";
  for (std::size_t i = 0; i <= order; ++i) {
    if (diff[i] != 0) return Verdict::failed(claim, i + 1, i, sub(lhs, rhs)[i]);
  }
  return Verdict::passed(claim, order + 1);
}

TruncSeries r_quotient(std::size_t order) {
  const TruncSeries num = mul(pochhammer_general(1, 5, order), pochhammer_general(4, 5, order));
  const TruncSeries den = mul(pochhammer_general(2, 5, order), pochhammer_general(3, 5, order));
  return divide(num, den);
}

ThetaInputs::ThetaInputs(std::optional<Perturbation> perturb) : perturb_(std::move(perturb)) {}

TruncSeries ThetaInputs::tweak(const std::string& name, TruncSeries s) {
  auto [it, fresh] = min_orders_.emplace(name, s.order());
  if (!fresh && s.order() < it->second) it->second = s.order();
  if (!perturb_ || perturb_->constructor != name || perturb_->index > s.order()) return s;
  return add(s, monomial(1, perturb_->index, s.order()));
}

TruncSeries ThetaInputs::f(std::size_t m, std::size_t order) {
  return tweak("f" + std::to_string(m), pochhammer(m, order));
}
TruncSeries ThetaInputs::phi(std::size_t order) { return tweak("phi", phi_direct(order)); }
TruncSeries ThetaInputs::psi(std::size_t order) { return tweak("psi", psi_direct(order)); }
TruncSeries ThetaInputs::phi_neg(std::size_t order) { return tweak("phi_neg", phi_neg_direct(order)); }

TruncSeries ThetaInputs::lambert_phi2(std::size_t order) {
  return tweak("lambert_phi2",
               add(one(order), scale(lambert_one_plus_q2n(order, [](std::size_t) { return 1L; }), 4)));
}
TruncSeries ThetaInputs::lambert_legendre5(std::size_t order) {
  return tweak("lambert_legendre5",
               lambert_one_minus_qn_sq(order, [](std::size_t n) { return long{legendre5(n)}; }));
}
TruncSeries ThetaInputs::lambert_restricted(std::size_t order) {
  return tweak("lambert_restricted",
               lambert_one_plus_q2n(order, [](std::size_t n) { return n % 5 ? 1L : 0L; }));
}
TruncSeries ThetaInputs::lambert_alternating(std::size_t order) {
  return tweak("lambert_alternating",
               lambert_one_plus_q2n(order, [](std::size_t n) { return n % 2 ? 1L : -1L; }));
}
TruncSeries ThetaInputs::lambert_q5(std::size_t order) {
  return tweak("lambert_q5", lambert_one_plus_q2n(order, [](std::size_t n) { return n % 5 ? 0L : 1L; }));
}
TruncSeries ThetaInputs::lambert_all(std::size_t order) {
  return tweak("lambert_all", lambert_one_plus_q2n(order, [](std::size_t) { return 1L; }));
}
TruncSeries ThetaInputs::r(std::size_t order) { return tweak("R", r_quotient(order)); }
TruncSeries ThetaInputs::g_even(std::size_t order) { return tweak("G_e", g_series(order).even); }

TruncSeries ThetaInputs::at_power(const std::function<TruncSeries(std::size_t)>& build,
                                  std::size_t t, std::size_t order) {
  return substitute_power(build(order / t), t, order);
}

Verdict verify_identity(const IdentityRecord& rec) {
  const std::string claim = rec.id + ": " + rec.statement;
  TruncSeries lhs;
  TruncSeries rhs;
  try {
    lhs = rec.lhs();
    rhs = rec.rhs();
  } catch (const InvalidUnit& e) {
    // A side could not be formed (e.g. a divisor lost its unit constant term).
    return Verdict{claim + " [" + e.what() + "]", false, 0, std::nullopt};
  }
  if (lhs.order() != rec.order || rhs.order() != rec.order) {
    throw UsageError("identity " + rec.id + ": constructor returned the wrong order");
  }
  const TruncSeries diff = sub(lhs, rhs);
  const TruncSeries test = rec.mode == Comparison::exact ? diff : reduce_mod(diff, rec.modulus);
  for (std::size_t i = 0; i <= rec.order; ++i) {
    if (test[i] != 0) return Verdict::failed(claim, i + 1, i, diff[i]);
  }
  return Verdict::passed(claim, rec.order + 1);
}

std::vector<IdentityRecord> identity_inventory(ThetaInputs& in, const SuiteConfig& cfg) {
  const std::size_t N = cfg.exact_order;
  const std::size_t C = cfg.congruence_order;
  std::vector<IdentityRecord> out;

  auto exact = [&](std::string id, std::string stmt, std::function<TruncSeries()> lhs,
                   std::function<TruncSeries()> rhs) {
    out.push_back({std::move(id), std::move(stmt), Comparison::exact, 0, N, std::move(lhs),
                   std::move(rhs)});
  };
  auto modular = [&](std::string id, std::string stmt, unsigned long m, std::size_t order,
                     std::function<TruncSeries()> lhs, std::function<TruncSeries()> rhs) {
    out.push_back({std::move(id), std::move(stmt), Comparison::modular, m, order, std::move(lhs),
                   std::move(rhs)});
  };

  ThetaInputs* I = &in;
  auto phi_at = [I](std::size_t t, std::size_t n) {
    return I->at_power([I](std::size_t k) { return I->phi(k); }, t, n);
  };
  auto phi_neg_at = [I](std::size_t t, std::size_t n) {
    return I->at_power([I](std::size_t k) { return I->phi_neg(k); }, t, n);
  };
  auto psi_at = [I](std::size_t t, std::size_t n) {
    return I->at_power([I](std::size_t k) { return I->psi(k); }, t, n);
  };
  auto sq = [](const TruncSeries& s) { return mul(s, s); };
  // sum sigma_e mex(2n) q^n
  auto even_part = [I](std::size_t n) { return dissect(I->g_even(2 * n), 2, 0); };
  auto rhs_mod4 = [I](std::size_t n) {
    const TruncSeries f1 = I->f(1, n);
    const TruncSeries quot = shift(divide(power(I->f(5, n), 5), f1), 1);
    return scale(mul(f1, add(I->lambert_q5(n), quot)), 2);
  };

  exact("phi-eta", "phi(q) = f2^5/(f1^2 f4^2)", [=] { return I->phi(N); },
        [=] { return divide(power(I->f(2, N), 5), mul(sq(I->f(1, N)), sq(I->f(4, N)))); });
  exact("psi-eta", "psi(q) = f2^2/f1", [=] { return I->psi(N); },
        [=] { return divide(sq(I->f(2, N)), I->f(1, N)); });
  exact("phi-neg-eta", "phi(-q) = f1^2/f2", [=] { return I->phi_neg(N); },
        [=] { return divide(sq(I->f(1, N)), I->f(2, N)); });
  exact("phi-neg-quotient", "phi(-q) = phi(-q^2)^2/phi(q)", [=] { return I->phi_neg(N); },
        [=] { return divide(sq(phi_neg_at(2, N)), I->phi(N)); });
  exact("phi-product", "phi(q) phi(-q) = phi(-q^2)^2", [=] { return mul(I->phi(N), I->phi_neg(N)); },
        [=] { return sq(phi_neg_at(2, N)); });
  exact("phi-sum", "phi(q) + phi(-q) = 2 phi(q^4)", [=] { return add(I->phi(N), I->phi_neg(N)); },
        [=] { return scale(phi_at(4, N), 2); });
  exact("phi-difference", "phi(q) - phi(-q) = 4q psi(q^8)", [=] { return sub(I->phi(N), I->phi_neg(N)); },
        [=] { return scale(shift(psi_at(8, N), 1), 4); });
  exact("phi-dissection", "phi(q) = phi(q^4) + 2q psi(q^8)", [=] { return I->phi(N); },
        [=] { return add(phi_at(4, N), scale(shift(psi_at(8, N), 1), 2)); });
  exact("phi-neg-dissection", "phi(-q) = phi(q^4) - 2q psi(q^8)", [=] { return I->phi_neg(N); },
        [=] { return sub(phi_at(4, N), scale(shift(psi_at(8, N), 1), 2)); });
  exact("phi-squared-lambert", "phi(q)^2 = 1 + 4 sum q^n/(1+q^2n)", [=] { return sq(I->phi(N)); },
        [=] { return I->lambert_phi2(N); });
  exact("legendre5-lambert", "sum (n/5) q^n/(1-q^n)^2 = q f5^5/f1", [=] { return I->lambert_legendre5(N); },
        [=] { return shift(divide(power(I->f(5, N), 5), I->f(1, N)), 1); });
  modular("restricted-lambert-mod2", "sum_{5 !| n} q^n/(1+q^2n) = q f5^5/f1 (mod 2)", 2, N,
          [=] { return I->lambert_restricted(N); },
          [=] { return shift(divide(power(I->f(5, N), 5), I->f(1, N)), 1); });

  auto r5 = [I](std::size_t n) { return I->at_power([I](std::size_t k) { return I->r(k); }, 5, n); };
  exact("f1-5-dissection", "f1 = f25 (R(q^5)^-1 - q - q^2 R(q^5))", [=] { return I->f(1, N); },
        [=] {
          const TruncSeries r = r5(N);
          const TruncSeries inner =
              sub(sub(invert(r), monomial(1, 1, N)), shift(r, 2));
          return mul(I->f(25, N), inner);
        });
  exact("f1-inverse-5-dissection", "1/f1 = f25^5/f5^6 (R^-4 + qR^-3 + 2q^2R^-2 + 3q^3R^-1 + 5q^4 - 3q^5R + 2q^6R^2 - q^7R^3 + q^8R^4)",
        [=] { return invert(I->f(1, N)); },
        [=] {
          const TruncSeries r = r5(N);
          const TruncSeries ri = invert(r);
          const struct {
            long c;
            long e;
          } terms[] = {{1, -4}, {1, -3}, {2, -2}, {3, -1}, {5, 0}, {-3, 1}, {2, 2}, {-1, 3}, {1, 4}};
          TruncSeries inner(N);
          for (std::size_t s = 0; s < 9; ++s) {
            const auto [c, e] = terms[s];
            const TruncSeries pw = e >= 0 ? power(r, e) : power(ri, -e);
            inner = add(inner, scale(shift(pw, s), c));
          }
          return mul(divide(power(I->f(25, N), 5), power(I->f(5, N), 6)), inner);
        });

  exact("G_e-theta", "2 G_e = f2 (phi(q)/phi(-q^2)^2 - phi(-q))", [=] { return scale(I->g_even(N), 2); },
        [=] {
          return mul(I->f(2, N), sub(divide(I->phi(N), sq(phi_neg_at(2, N))), I->phi_neg(N)));
        });
  exact("G_e-theta-dissected",
        "2 G_e = f2 (phi(q^4)/phi(-q^2)^2 - phi(q^4) + 2q (psi(q^8)/phi(-q^2)^2 + psi(q^8)))",
        [=] { return scale(I->g_even(N), 2); },
        [=] {
          const TruncSeries d = sq(phi_neg_at(2, N));
          const TruncSeries p4 = phi_at(4, N);
          const TruncSeries s8 = psi_at(8, N);
          const TruncSeries tail = scale(shift(add(divide(s8, d), s8), 1), 2);
          return mul(I->f(2, N), add(sub(divide(p4, d), p4), tail));
        });
  exact("G_e-even-theta", "2 sum sigma_e mex(2n) q^n = f1 (phi(q^2)/phi(-q)^2 - phi(q^2))",
        [=] { return scale(even_part(N), 2); },
        [=] {
          const TruncSeries p2 = phi_at(2, N);
          return mul(I->f(1, N), sub(divide(p2, sq(I->phi_neg(N))), p2));
        });
  exact("alternating-lambert", "1 - phi(-q)^2 = 4 sum (-1)^(n+1) q^n/(1+q^2n)",
        [=] { return sub(one(N), sq(I->phi_neg(N))); },
        [=] { return scale(I->lambert_alternating(N), 4); });
  exact("G_e-even-lambert",
        "sum sigma_e mex(2n) q^n = f1 phi(q^2)/phi(-q)^2 * 2 sum (-1)^(n+1) q^n/(1+q^2n)",
        [=] { return even_part(N); },
        [=] {
          const TruncSeries lead = divide(mul(I->f(1, N), phi_at(2, N)), sq(I->phi_neg(N)));
          return mul(lead, scale(I->lambert_alternating(N), 2));
        });
  exact("lambert-5-split", "sum q^n/(1+q^2n) = sum q^5n/(1+q^10n) + sum_{5 !| n} q^n/(1+q^2n)",
        [=] { return I->lambert_all(N); },
        [=] { return add(I->lambert_q5(N), I->lambert_restricted(N)); });
  modular("G_e-even-mod4", "sum sigma_e mex(2n) q^n = 2 f1 sum q^n/(1+q^2n) (mod 4)", 4, C,
          [=] { return even_part(C); },
          [=] { return scale(mul(I->f(1, C), I->lambert_all(C)), 2); });
  modular("G_e-even-mod4-split", "sum sigma_e mex(2n) q^n = 2 f1 (sum q^5n/(1+q^10n) + q f5^5/f1) (mod 4)", 4, C,
          [=] { return even_part(C); }, [=] { return rhs_mod4(C); });

  for (std::size_t res : {3U, 4U}) {
    const std::size_t m = (C - res) / 5;
    const std::string tag = std::to_string(res);
    modular("residue-vanishing-" + tag,
            "5-dissection of the mod-4 right side at residue " + tag + " vanishes (mod 4)", 4, m,
            [=] { return dissect(rhs_mod4(C), 5, res); }, [=] { return TruncSeries(m); });
    modular("sigma_e-residue-" + tag,
            "sigma_e mex(10n+" + std::to_string(2 * res) + ") = 0 (mod 4)", 4, m,
            [=] { return dissect(even_part(C), 5, res); }, [=] { return TruncSeries(m); });
  }
  return out;
}

std::vector<IdentityResult> verify_identity_suite(const SuiteConfig& cfg,
                                                  std::optional<Perturbation> perturb) {
  ThetaInputs inputs(std::move(perturb));
  std::vector<IdentityResult> out;
  for (const auto& rec : identity_inventory(inputs, cfg)) out.push_back({rec.id, verify_identity(rec)});
  return out;
}

}  // namespace mexlab
