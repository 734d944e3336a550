#pragma once

// Text cache format for series:
//
//   qseries-cache v1 name=<identifier> order=<N>
//   <coefficient 0>
//   ...
//   <coefficient N>
//
// Coefficients are plain decimal integers, one per line, '\n' terminated.

#include <filesystem>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>

#include "mexlab/series.hpp"

namespace mexlab {

struct CachedSeries {
  std::string name;
  TruncSeries series;
};

void write_series(std::ostream& out, const std::string& name, const TruncSeries& s);
// Throws CacheFormatError on a bad header, an unknown version, a short body or
// a non-integer line.
CachedSeries read_series(std::istream& in);

// Writes through a temporary file in the same directory, then renames.
void write_series_file(const std::filesystem::path& path, const std::string& name,
                       const TruncSeries& s);
CachedSeries read_series_file(const std::filesystem::path& path);

// One file per (name, order) in a directory. A request at order N is served
// from the smallest cached order >= N, truncated; otherwise it is computed at
// N and stored.
class SeriesCache {
 public:
  using Warn = std::function<void(const std::string&)>;

  explicit SeriesCache(std::filesystem::path dir, Warn warn = {});

  std::filesystem::path path_for(const std::string& name, std::size_t order) const;

  std::optional<TruncSeries> lookup(const std::string& name, std::size_t order) const;
  void store(const std::string& name, const TruncSeries& s) const;

  TruncSeries get_or_compute(const std::string& name, std::size_t order,
                             const std::function<TruncSeries(std::size_t)>& compute) const;

 private:
  std::filesystem::path dir_;
  Warn warn_;
};

}  // namespace mexlab
