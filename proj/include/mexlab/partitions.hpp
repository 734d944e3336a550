#pragma once

// Brute-force ground truth for the mex statistics.
//
// Nothing here is clever on purpose: partitions are enumerated one by one and
// the odd/even mex sums are accumulated directly from the definition.

#include <cstdint>
#include <functional>
#include <span>
#include <utility>
#include <vector>

namespace mexlab {

// Parts in non-increasing order, all >= 1. The empty partition is the unique
// partition of 0.
class Partition {
 public:
  Partition() = default;
  // Sorts the parts; throws UsageError on a part below 1.
  explicit Partition(std::vector<unsigned> parts);

  std::span<const unsigned> parts() const noexcept { return parts_; }
  unsigned n() const noexcept { return n_; }
  bool empty() const noexcept { return parts_.empty(); }

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<unsigned> parts_;
  unsigned n_ = 0;
};

// Least positive integer that is not a part; 1 for the empty partition.
unsigned mex(const Partition& p);
unsigned mex(std::span<const unsigned> parts);

// Visits every partition of n in reverse lexicographic order (n first,
// 1+1+...+1 last) together with its mex. The span is only valid during the
// callback.
void for_each_partition(unsigned n,
                        const std::function<void(std::span<const unsigned>, unsigned)>& visit);

struct MexSplit {
  std::uint64_t odd = 0;   // sigma_o mex(n)
  std::uint64_t even = 0;  // sigma_e mex(n)

  friend bool operator==(const MexSplit&, const MexSplit&) = default;
};

inline constexpr unsigned kDefaultEnumerationCap = 50;

// Throws EnumerationTooLarge when n > cap.
MexSplit sigma_mex_split(unsigned n, unsigned cap = kDefaultEnumerationCap);

// sigma_mex_split for 0..max_n, one n per task across threads.
std::vector<MexSplit> sigma_mex_table(unsigned max_n, unsigned cap = kDefaultEnumerationCap);

// Injection on odd-mex partitions, P_o(n) -> P_o(n+1): append a 1 when
// mex != 1, otherwise bump the (first) largest part. The empty partition maps
// to (1); that image has mex 2, so the map only preserves mex for n >= 1.
// Throws UsageError on even-mex input.
Partition phi_injection(const Partition& p);

// P_e(n) -> P_e(n+1): append a part 1. Throws UsageError on odd-mex input.
Partition psi_injection(const Partition& p);

}  // namespace mexlab
