#include "mexlab/partitions.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "mexlab/errors.hpp"

namespace mexlab {

Partition::Partition(std::vector<unsigned> parts) : parts_(std::move(parts)) {
  if (std::find(parts_.begin(), parts_.end(), 0U) != parts_.end()) {
    throw UsageError("partition parts must be positive");
  }
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
  n_ = std::accumulate(parts_.begin(), parts_.end(), 0U);
}

unsigned mex(std::span<const unsigned> parts) {
  std::vector<bool> seen(parts.size() + 2, false);
  for (unsigned p : parts) {
    if (p < seen.size()) seen[p] = true;
  }
  unsigned m = 1;
  while (seen[m]) ++m;
  return m;
}

unsigned mex(const Partition& p) { return mex(p.parts()); }

void for_each_partition(unsigned n,
                        const std::function<void(std::span<const unsigned>, unsigned)>& visit) {
  if (n == 0) {
    visit({}, 1);
    return;
  }
  // Zoghbi-Stojmenovic successor (ZS1). x[0..h] are the parts > 1 and
  // x[h+1..m-1] are 1s. count[v] tracks multiplicities of the parts > 1 so
  // that mex costs O(mex).
  std::vector<unsigned> x(n + 1, 1);
  std::vector<unsigned> count(n + 2, 0);
  x[0] = n;
  std::size_t m = 1;
  std::ptrdiff_t h = 0;
  if (n > 1) {
    count[n] = 1;
  } else {
    h = -1;
  }

  auto current_mex = [&] {
    const std::size_t ones = m - static_cast<std::size_t>(h + 1);
    if (ones == 0) return 1U;
    unsigned v = 2;
    while (count[v] != 0) ++v;
    return v;
  };

  visit(std::span<const unsigned>(x.data(), m), current_mex());
  while (h >= 0) {
    auto& xh = x[static_cast<std::size_t>(h)];
    if (xh == 2) {
      --count[2];
      xh = 1;
      --h;
      ++m;
    } else {
      const unsigned r = xh - 1;
      std::size_t t = m - static_cast<std::size_t>(h);
      --count[xh];
      xh = r;
      ++count[r];
      while (t >= r) {
        ++h;
        x[static_cast<std::size_t>(h)] = r;
        ++count[r];
        t -= r;
      }
      if (t == 0) {
        m = static_cast<std::size_t>(h) + 1;
      } else {
        m = static_cast<std::size_t>(h) + 2;
        if (t > 1) {
          ++h;
          x[static_cast<std::size_t>(h)] = static_cast<unsigned>(t);
          ++count[t];
        }
      }
    }
    visit(std::span<const unsigned>(x.data(), m), current_mex());
  }
}

MexSplit sigma_mex_split(unsigned n, unsigned cap) {
  if (n > cap) throw EnumerationTooLarge(n, cap);
  MexSplit split;
  for_each_partition(n, [&](std::span<const unsigned>, unsigned mx) {
    if (mx % 2 == 1) {
      split.odd += mx;
    } else {
      split.even += mx;
    }
  });
  return split;
}

std::vector<MexSplit> sigma_mex_table(unsigned max_n, unsigned cap) {
  if (max_n > cap) throw EnumerationTooLarge(max_n, cap);
  std::vector<MexSplit> table(max_n + 1);
  const auto count = static_cast<long long>(max_n) + 1;
  // Largest n first so the expensive enumerations start early.
#pragma omp parallel for schedule(dynamic, 1)
  for (long long i = count - 1; i >= 0; --i) {
    table[static_cast<std::size_t>(i)] = sigma_mex_split(static_cast<unsigned>(i), cap);
  }
  return table;
}

Partition phi_injection(const Partition& p) {
  const unsigned mx = mex(p);
  if (mx % 2 == 0) throw UsageError("phi_injection: mex must be odd");
  std::vector<unsigned> parts(p.parts().begin(), p.parts().end());
  if (mx != 1 || parts.empty()) {
    parts.push_back(1);
  } else {
    parts.front() += 1;
  }
  return Partition(std::move(parts));
}

Partition psi_injection(const Partition& p) {
  if (mex(p) % 2 != 0) throw UsageError("psi_injection: mex must be even");
  std::vector<unsigned> parts(p.parts().begin(), p.parts().end());
  parts.push_back(1);
  return Partition(std::move(parts));
}

}  // namespace mexlab
