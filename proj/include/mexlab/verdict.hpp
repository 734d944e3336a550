#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <utility>

namespace mexlab {

// First failing instance of a checked claim. For a single progression claim
// "c(mn + r) ..." n is the progression parameter; claims spanning several
// progressions report the coefficient index instead.
struct Counterexample {
  std::uint64_t n;
  mpz_class value;
};

// Outcome of a mechanical check. A failure is a result, not an error.
struct Verdict {
  std::string claim;
  bool pass = true;
  std::uint64_t checked = 0;
  std::optional<Counterexample> counterexample;

  static Verdict passed(std::string claim, std::uint64_t checked) {
    return {std::move(claim), true, checked, std::nullopt};
  }
  static Verdict failed(std::string claim, std::uint64_t checked, std::uint64_t n,
                        mpz_class value) {
    return {std::move(claim), false, checked, Counterexample{n, std::move(value)}};
  }
};

}  // namespace mexlab
