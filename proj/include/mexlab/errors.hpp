#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace mexlab {

// Precondition violations by the caller (order mismatch, bad residue, ...).
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Inversion requested for a series whose constant term is not +1 or -1.
class InvalidUnit : public std::domain_error {
 public:
  InvalidUnit() : std::domain_error("series constant term is not a unit (+1 or -1)") {}
};

// Exact halving hit an odd coefficient.
class NotDivisible : public std::domain_error {
 public:
  explicit NotDivisible(std::size_t index)
      : std::domain_error("odd coefficient at index " + std::to_string(index)), index_(index) {}
  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

class EnumerationTooLarge : public std::length_error {
 public:
  EnumerationTooLarge(unsigned n, unsigned cap)
      : std::length_error("partition enumeration of n=" + std::to_string(n) +
                          " exceeds the configured cap " + std::to_string(cap)) {}
};

class InvalidFamily : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class InvalidPrime : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Two independent constructions of the same series disagreed.
class IdentityViolation : public std::runtime_error {
 public:
  IdentityViolation(std::string id, std::size_t index)
      : std::runtime_error("identity " + id + " violated at coefficient " + std::to_string(index)),
        id_(std::move(id)),
        index_(index) {}
  const std::string& id() const noexcept { return id_; }
  std::size_t index() const noexcept { return index_; }

 private:
  std::string id_;
  std::size_t index_;
};

class NotIntegralWeight : public std::domain_error {
 public:
  NotIntegralWeight() : std::domain_error("eta quotient weight is not an integer") {}
};

class CacheFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace mexlab
