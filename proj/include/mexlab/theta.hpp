#pragma once

// Ramanujan theta functions, Lambert series, the 5-dissection quotient R(q),
// and an inventory of the identities behind the mod-4 congruences at 10n+6
// and 10n+8, each checkable coefficient by coefficient.

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mexlab/series.hpp"
#include "mexlab/verdict.hpp"

namespace mexlab {

// phi(q) = sum_{n in Z} q^{n^2} = f2^5 / (f1^2 f4^2).
// Built both ways; a disagreement throws IdentityViolation.
TruncSeries phi_series(std::size_t order);
// psi(q) = sum_{n>=0} q^{n(n+1)/2} = f2^2 / f1.
TruncSeries psi_series(std::size_t order);
// phi(-q) = sum (-1)^n q^{n^2} = f1^2 / f2.
TruncSeries phi_neg_series(std::size_t order);

// Sparse theta sums on their own (no cross-check).
TruncSeries phi_direct(std::size_t order);
TruncSeries psi_direct(std::size_t order);
TruncSeries phi_neg_direct(std::size_t order);

// sum_{n>=1} w(n) q^n / (1 + q^{2n}), each term expanded as a geometric series.
TruncSeries lambert_one_plus_q2n(std::size_t order, const std::function<long(std::size_t)>& w);
// sum_{n>=1} w(n) q^n / (1 - q^n)^2.
TruncSeries lambert_one_minus_qn_sq(std::size_t order, const std::function<long(std::size_t)>& w);

int legendre5(std::size_t n);

// 1 + 4 sum q^n/(1+q^{2n}); asserts equality with phi(q)^2.
TruncSeries lambert_phi2(std::size_t order);
// sum (n/5) q^n/(1-q^n)^2; asserts equality with q f5^5/f1 and the mod-2
// companion sum_{5 !| n} q^n/(1+q^{2n}) = q f5^5/f1.
TruncSeries lambert_legendre5(std::size_t order);

// f_m^{2^k} = f_{2m}^{2^{k-1}} (mod 2^k) to the given order.
Verdict binomial_lemma_check(std::size_t m, unsigned k, std::size_t order);

// R(q) = (q;q^5)(q^4;q^5) / ((q^2;q^5)(q^3;q^5)).
TruncSeries r_quotient(std::size_t order);

// Replaces series constructors during a suite run so that a +1 change to one
// coefficient of one named input can be injected.
struct Perturbation {
  std::string constructor;
  std::size_t index = 0;
};

// Named series builders used by the identity inventory. Records the smallest
// order each constructor was asked for.
class ThetaInputs {
 public:
  explicit ThetaInputs(std::optional<Perturbation> perturb = std::nullopt);

  TruncSeries f(std::size_t m, std::size_t order);  // named "f<m>"
  TruncSeries phi(std::size_t order);
  TruncSeries psi(std::size_t order);
  TruncSeries phi_neg(std::size_t order);
  TruncSeries lambert_phi2(std::size_t order);
  TruncSeries lambert_legendre5(std::size_t order);
  TruncSeries lambert_restricted(std::size_t order);   // sum_{5 !| n} q^n/(1+q^{2n})
  TruncSeries lambert_alternating(std::size_t order);  // sum (-1)^{n+1} q^n/(1+q^{2n})
  TruncSeries lambert_q5(std::size_t order);           // sum q^{5n}/(1+q^{10n})
  TruncSeries lambert_all(std::size_t order);          // sum q^n/(1+q^{2n})
  TruncSeries r(std::size_t order);
  TruncSeries g_even(std::size_t order);

  // X(q^t) at the given order, from X built at order / t.
  TruncSeries at_power(const std::function<TruncSeries(std::size_t)>& build, std::size_t t,
                       std::size_t order);

  const std::map<std::string, std::size_t>& min_orders() const { return min_orders_; }

 private:
  TruncSeries tweak(const std::string& name, TruncSeries s);

  std::optional<Perturbation> perturb_;
  std::map<std::string, std::size_t> min_orders_;
};

enum class Comparison { exact, modular };

struct IdentityRecord {
  std::string id;
  std::string statement;
  Comparison mode = Comparison::exact;
  unsigned long modulus = 0;  // only for Comparison::modular
  std::size_t order = 0;
  std::function<TruncSeries()> lhs;
  std::function<TruncSeries()> rhs;  // for one-sided vanishing claims: the zero series
};

Verdict verify_identity(const IdentityRecord& rec);

struct SuiteConfig {
  std::size_t exact_order = 500;
  std::size_t congruence_order = 2000;
};

// The identity inventory, with constructors drawn from inputs. The records
// capture inputs by reference; it must outlive them.
std::vector<IdentityRecord> identity_inventory(ThetaInputs& inputs, const SuiteConfig& cfg = {});

struct IdentityResult {
  std::string id;
  Verdict verdict;
};

std::vector<IdentityResult> verify_identity_suite(const SuiteConfig& cfg = {},
                                                  std::optional<Perturbation> perturb = std::nullopt);

}  // namespace mexlab
