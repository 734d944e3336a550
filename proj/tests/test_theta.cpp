#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>
#include <set>

#include "mexlab/theta.hpp"
#include "oracles.hpp"

using namespace mexlab;
using S = TruncSeries;

namespace {

// r2(n): ordered representations n = a^2 + b^2 over the integers.
long sum_of_two_squares(long n) {
  long count = 0;
  for (long a = -n; a <= n; ++a) {
    for (long b = -n; b <= n; ++b) count += (a * a + b * b == n);
  }
  return count;
}

// q f5^5 / f1 by naive products: f5^5 times the partition counts.
std::vector<long long> q_f5_5_over_f1(std::size_t n) {
  auto f5 = oracle::naive_euler_product(5, n);
  std::vector<long long> acc(n + 1, 0);
  acc[0] = 1;
  for (int i = 0; i < 5; ++i) acc = oracle::naive_convolve(acc, f5);
  std::vector<long long> p(n + 1, 0);
  for (std::size_t k = 0; k <= n; ++k) p[k] = static_cast<long long>(oracle::count_partitions(k, k));
  auto prod = oracle::naive_convolve(acc, p);
  std::vector<long long> out(n + 1, 0);
  for (std::size_t k = 1; k <= n; ++k) out[k] = prod[k - 1];
  return out;
}

}  // namespace

TEST_CASE("theta series examples") {
  CHECK(phi_series(9) == S::from_ints({1, 2, 0, 0, 2, 0, 0, 0, 0, 2}, 9));
  CHECK(psi_series(10) == S::from_ints({1, 1, 0, 1, 0, 0, 1, 0, 0, 0, 1}, 10));
  CHECK(phi_neg_series(4) == S::from_ints({1, -2, 0, 0, 2}, 4));
  CHECK(phi_series(0) == one(0));
}

TEST_CASE("dual theta constructions agree to order 2000") {
  CHECK_NOTHROW(phi_series(2000));
  CHECK_NOTHROW(psi_series(2000));
  CHECK_NOTHROW(phi_neg_series(2000));
}

TEST_CASE("lambert_phi2 counts sums of two squares") {
  const S s = lambert_phi2(60);
  CHECK(s[0] == 1);
  CHECK(s[1] == 4);
  CHECK(s[3] == 0);
  for (long n = 0; n <= 60; ++n) CHECK(s[n] == sum_of_two_squares(n));
}

TEST_CASE("lambert_legendre5") {
  const S s = lambert_legendre5(40);
  CHECK(s[1] == 1);
  CHECK(s[2] == 1);
  CHECK(s[5] == 5);
  CHECK(s == oracle::to_series(q_f5_5_over_f1(40)));
  CHECK_NOTHROW(lambert_legendre5(1000));
}

TEST_CASE("binomial lemma instances") {
  CHECK(binomial_lemma_check(1, 1, 300).pass);
  CHECK(binomial_lemma_check(1, 3, 300).pass);
  CHECK(binomial_lemma_check(2, 2, 200).pass);
  CHECK(binomial_lemma_check(3, 4, 150).pass);
  CHECK(binomial_lemma_check(1, 1, 300).checked == 301);
  CHECK_THROWS_AS(binomial_lemma_check(0, 1, 10), UsageError);
}

TEST_CASE("r_quotient") {
  CHECK(r_quotient(3) == S::from_ints({1, -1, 1, 0}, 3));
  const S r = r_quotient(200);
  CHECK(mul(r, invert(r)) == one(200));
  // Independent expansion of the four products with machine words.
  std::vector<std::size_t> num;
  std::vector<std::size_t> den;
  for (std::size_t k = 0; 5 * k + 1 <= 200; ++k) {
    num.push_back(5 * k + 1);
    num.push_back(5 * k + 4);
    den.push_back(5 * k + 2);
    den.push_back(5 * k + 3);
  }
  const S n = oracle::to_series(oracle::product_of_factors(num, 200));
  const S d = oracle::to_series(oracle::product_of_factors(den, 200));
  CHECK(mul(r, d) == n);
}

TEST_CASE("identity suite passes") {
  const auto results = verify_identity_suite();
  std::set<std::string> ids;
  for (const auto& r : results) {
    INFO(r.verdict.claim);
    CHECK(r.verdict.pass);
    ids.insert(r.id);
  }
  for (const char* id : {"phi-eta", "psi-eta", "phi-neg-eta", "phi-neg-quotient", "phi-product", "phi-sum", "phi-difference", "phi-dissection", "phi-neg-dissection", "phi-squared-lambert",
                         "legendre5-lambert", "restricted-lambert-mod2", "f1-5-dissection", "f1-inverse-5-dissection", "G_e-theta", "G_e-theta-dissected", "G_e-even-theta", "G_e-even-mod4-split",
                         "residue-vanishing-3", "residue-vanishing-4", "sigma_e-residue-3", "sigma_e-residue-4"}) {
    CHECK(ids.count(id) == 1);
  }
}

TEST_CASE("identity verdicts report the first failing index") {
  IdentityRecord rec{"x", "q = 0", Comparison::exact, 0, 5,
                     [] { return monomial(1, 3, 5); }, [] { return S(5); }};
  const Verdict v = verify_identity(rec);
  CHECK_FALSE(v.pass);
  REQUIRE(v.counterexample);
  CHECK(v.counterexample->n == 3);
  CHECK(v.counterexample->value == 1);
  rec.mode = Comparison::modular;
  rec.modulus = 2;
  rec.lhs = [] { return monomial(2, 3, 5); };
  CHECK(verify_identity(rec).pass);
}

TEST_CASE("the suite is falsifiable by single-coefficient mutations") {
  const SuiteConfig small{120, 300};
  ThetaInputs probe;
  for (const auto& rec : identity_inventory(probe, small)) CHECK(verify_identity(rec).pass);
  const auto orders = probe.min_orders();
  CHECK(orders.size() >= 15);

  for (const auto& [name, min_order] : orders) {
    std::set<std::size_t> indices{0, 1, 2, 3, 7, min_order / 2, min_order};
    for (std::size_t idx : indices) {
      if (idx > min_order) continue;
      bool flipped = false;
      for (const auto& r : verify_identity_suite(small, Perturbation{name, idx})) {
        flipped = flipped || !r.verdict.pass;
      }
      INFO(name << " at q^" << idx);
      CHECK(flipped);
    }
  }
}
