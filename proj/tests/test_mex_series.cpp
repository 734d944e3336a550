#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "mexlab/mex_series.hpp"
#include "mexlab/partitions.hpp"
#include "oracles.hpp"

using namespace mexlab;
using S = TruncSeries;

TEST_CASE("g_series examples") {
  const MexSeries g = g_series(4);
  CHECK(g.odd == S::from_ints({1, 0, 1, 4, 5}, 4));
  CHECK(g.even == S::from_ints({0, 2, 2, 2, 4}, 4));
  CHECK(g_series(0).odd[0] == 1);
  CHECK(g_series(5).even[5] == 6);
}

TEST_CASE("g_series equals the enumeration oracle") {
  const MexSeries g = g_series(30);
  const auto table = sigma_mex_table(30);
  for (unsigned n = 0; n <= 30; ++n) {
    CHECK(g.odd[n] == static_cast<unsigned long>(table[n].odd));
    CHECK(g.even[n] == static_cast<unsigned long>(table[n].even));
  }
}

TEST_CASE("f1sq examples and the relation G_o - G_e = f1^2") {
  CHECK(f1sq_series(7) == S::from_ints({1, -2, -1, 2, 1, 2, -2, 0}, 7));
  const std::size_t n = 600;
  const MexSeries g = g_series(n);
  CHECK(sub(g.odd, g.even) == f1sq_series(n));
  CHECK(add(g.odd, g.even) == sigma_series(n));
  CHECK(f1sq_series(300) == oracle::to_series(oracle::naive_convolve(
                                oracle::naive_euler_product(1, 300), oracle::naive_euler_product(1, 300))));
}

TEST_CASE("sigma_series agrees with dense inversion of f1^2") {
  const std::size_t n = 250;
  const S f1 = pochhammer(1, n);
  const S f2 = pochhammer(2, n);
  CHECK(sigma_series(n) == mul(invert(mul(f1, f1)), mul(f2, f2)));
}

TEST_CASE("check_congruence examples") {
  const MexSeries g = g_series(2000);
  const Verdict v = check_congruence(g.odd, {2, 1, 4, "", Sequence::sigma_o});
  CHECK(v.pass);
  CHECK(v.checked == 1000);
  CHECK(check_congruence(g.even, {10, 6, 4, "", Sequence::sigma_e}).pass);

  const Verdict neg = check_congruence(g.even, {4, 1, 4, "negative control", Sequence::sigma_e});
  CHECK_FALSE(neg.pass);
  REQUIRE(neg.counterexample);
  CHECK(neg.counterexample->n == 0);
  CHECK(neg.counterexample->value == 2);
  CHECK(neg.checked == 1);

  CHECK_THROWS_AS(check_congruence(S(3), {10, 6, 4, "", Sequence::sigma_e}), UsageError);
  CHECK_THROWS_AS(check_congruence(g.odd, {4, 4, 4, "", Sequence::sigma_o}), UsageError);
}

TEST_CASE("fixed congruences hold to order 3000") {
  const MexSeries g = g_series(3000);
  for (const auto& t : fixed_congruences()) {
    const S& s = t.sequence == Sequence::sigma_o ? g.odd : g.even;
    const Verdict v = check_congruence(s, t);
    INFO(v.claim);
    CHECK(v.pass);
  }
}

TEST_CASE("family_targets examples") {
  auto rs = [](const std::vector<CongruenceTarget>& ts) {
    std::vector<std::uint64_t> out;
    for (const auto& t : ts) out.push_back(t.r);
    return out;
  };
  const auto p5a = family_targets({5, 1, {}});
  CHECK(rs(p5a) == std::vector<std::uint64_t>{7, 17});
  CHECK(p5a[0].m == 50);
  CHECK(p5a[0].modulus == 4);
  CHECK(p5a[0].sequence == Sequence::sigma_e);

  const auto p5b = family_targets({5, 2, {}});
  CHECK(rs(p5b) == std::vector<std::uint64_t>{17});
  CHECK(p5b[0].m == 100);
  CHECK(p5b[0].modulus == 8);
  CHECK(p5b[0].sequence == Sequence::sigma_e);

  const auto p7c = family_targets({7, 3, {}});
  CHECK(rs(p7c) == std::vector<std::uint64_t>{18, 46});
  CHECK(p7c[0].m == 196);
  CHECK(p7c[0].modulus == 4);
  CHECK(p7c[0].sequence == Sequence::sigma_o);

  // p = 11 = 11 (mod 24): part 2 wants k = 1 (mod 4), part 3 k = 0 (mod 4).
  CHECK(admissible_ks(11, 2) == std::vector<std::uint64_t>{1, 5, 9});
  CHECK(admissible_ks(11, 3) == std::vector<std::uint64_t>{4, 8});
  CHECK(admissible_ks(29, 3) == std::vector<std::uint64_t>{4, 8, 12, 16, 20, 24, 28});
}

TEST_CASE("family_targets rejects inadmissible input") {
  CHECK_THROWS_AS(family_targets({13, 1, {}}), InvalidFamily);   // 13 = 1 mod 12
  CHECK_THROWS_AS(family_targets({17, 2, {}}), InvalidFamily);   // 17 mod 24
  CHECK_THROWS_AS(family_targets({9, 1, {}}), InvalidFamily);    // not prime
  CHECK_THROWS_AS(family_targets({5, 1, {2}}), InvalidFamily);   // even k
  CHECK_THROWS_AS(family_targets({5, 2, {1}}), InvalidFamily);   // k = 1 mod 4
  CHECK_THROWS_AS(family_targets({5, 1, {5}}), InvalidFamily);   // k >= p
  CHECK_THROWS_AS(family_targets({5, 4, {}}), InvalidFamily);
  CHECK_NOTHROW(family_targets({17, 1, {}}));  // 17 = 5 mod 12 is fine for part 1
}

TEST_CASE("small prime families pass") {
  const MexSeries g = g_series(family_order(5));
  for (int part = 1; part <= 3; ++part) {
    for (const auto& t : family_targets({5, part, {}})) {
      const Verdict v = check_congruence(t.sequence == Sequence::sigma_o ? g.odd : g.even, t);
      INFO(v.claim);
      CHECK(v.pass);
    }
  }
  CHECK(progression_equality_check(g, 5).pass);
}

TEST_CASE("cooper_check") {
  const S a = f1sq_series(2000);
  CHECK(a[2] == -1);
  CHECK(a[0] == 1);
  CHECK(a[7] == 0);
  CHECK(a[4] == 1);
  CHECK(cooper_epsilon(5) == -1);
  CHECK(cooper_epsilon(7) == 1);
  CHECK(cooper_epsilon(11) == 1);
  CHECK(cooper_epsilon(17) == -1);
  for (std::uint64_t p : {5U, 7U, 11U, 17U, 19U, 23U}) CHECK(cooper_check(p, a).pass);
  CHECK_THROWS_AS(cooper_check(13, a), InvalidPrime);
  CHECK_THROWS_AS(cooper_check(25, a), InvalidPrime);

  // Flipping the sign convention must be caught.
  std::vector<mpz_class> c(a.coeffs().begin(), a.coeffs().end());
  c[7] = 1;
  const Verdict bad = cooper_check(5, S(std::move(c)));
  CHECK_FALSE(bad.pass);
  REQUIRE(bad.counterexample);
  CHECK(bad.counterexample->n == 1);  // 7 = 5*1 + 2
}

TEST_CASE("density_scan examples") {
  const MexSeries g = g_series(12);
  const auto d = density_scan(g.odd, 4, {10});
  REQUIRE(d.size() == 1);
  // Oracle: classify sigma_o mex(1..10) mod 4 from enumeration.
  unsigned zeros = 0;
  for (unsigned n = 1; n <= 10; ++n) zeros += (oracle::sigma_split(n).first % 4 == 0);
  mpq_class expected(zeros, 10);
  expected.canonicalize();
  CHECK(d[0].delta == expected);
  // sigma_o mex(1..10) = 0,1,4,5,8,10,16,22,32,47: only the odd n are 0 mod 4.
  CHECK(d[0].delta == mpq_class(1, 2));

  const auto z = density_scan(S(50), 8, {50, 10, 30});
  REQUIRE(z.size() == 3);
  CHECK(z[0].x == 10);
  for (const auto& p : z) CHECK(p.delta == 1);

  CHECK_THROWS_AS(density_scan(S(5), 2, {6}), UsageError);
  CHECK_THROWS_AS(density_scan(S(5), 2, {0}), UsageError);
}
