#include "mexlab/cache.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <regex>
#include <unistd.h>

namespace mexlab {

namespace fs = std::filesystem;

namespace {

constexpr const char* kMagic = "qseries-cache";
constexpr const char* kVersion = "v1";

bool valid_name(const std::string& name) {
  static const std::regex re("[A-Za-z_][A-Za-z0-9_.-]*");
  return std::regex_match(name, re);
}

}  // namespace

void write_series(std::ostream& out, const std::string& name, const TruncSeries& s) {
  if (!valid_name(name)) throw UsageError("cache: invalid series name '" + name + "'");
  out << kMagic << ' ' << kVersion << " name=" << name << " order=" << s.order() << '\n';
  for (const mpz_class& c : s.coeffs()) out << c.get_str() << '\n';
}

CachedSeries read_series(std::istream& in) {
  std::string header;
  if (!std::getline(in, header)) throw CacheFormatError("cache: empty input");
  static const std::regex re(R"(^(\S+) (\S+) name=(\S+) order=(\d+)$)");
  std::smatch m;
  if (!std::regex_match(header, m, re) || m[1] != kMagic) {
    throw CacheFormatError("cache: malformed header '" + header + "'");
  }
  if (m[2] != kVersion) {
    throw CacheFormatError("cache: unsupported version '" + m[2].str() + "'");
  }
  const std::string name = m[3];
  const auto order = static_cast<std::size_t>(std::stoull(m[4]));

  std::vector<mpz_class> coeffs(order + 1);
  std::string line;
  for (std::size_t i = 0; i <= order; ++i) {
    if (!std::getline(in, line)) {
      throw CacheFormatError("cache: truncated body at coefficient " + std::to_string(i));
    }
    if (coeffs[i].set_str(line, 10) != 0) {
      throw CacheFormatError("cache: bad coefficient on line " + std::to_string(i + 2));
    }
  }
  return {name, TruncSeries(std::move(coeffs))};
}

void write_series_file(const fs::path& path, const std::string& name, const TruncSeries& s) {
  fs::path tmp = path;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cache: cannot open " + tmp.string());
    write_series(out, name, s);
    out.flush();
    if (!out) throw std::runtime_error("cache: write failed for " + tmp.string());
  }
  fs::rename(tmp, path);
}

CachedSeries read_series_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CacheFormatError("cache: cannot open " + path.string());
  return read_series(in);
}

SeriesCache::SeriesCache(fs::path dir, Warn warn) : dir_(std::move(dir)), warn_(std::move(warn)) {}

fs::path SeriesCache::path_for(const std::string& name, std::size_t order) const {
  return dir_ / (name + ".order" + std::to_string(order) + ".qs");
}

std::optional<TruncSeries> SeriesCache::lookup(const std::string& name, std::size_t order) const {
  if (!fs::is_directory(dir_)) return std::nullopt;
  const std::string prefix = name + ".order";
  std::optional<std::size_t> best;
  for (const auto& entry : fs::directory_iterator(dir_)) {
    const std::string file = entry.path().filename().string();
    if (file.rfind(prefix, 0) != 0 || entry.path().extension() != ".qs") continue;
    const std::string digits = file.substr(prefix.size(), file.size() - prefix.size() - 3);
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos) continue;
    const auto cached = static_cast<std::size_t>(std::stoull(digits));
    if (cached >= order && (!best || cached < *best)) best = cached;
  }
  if (!best) return std::nullopt;

  const fs::path path = path_for(name, *best);
  try {
    CachedSeries c = read_series_file(path);
    if (c.name != name || c.series.order() != *best) {
      throw CacheFormatError("cache: header does not match file name " + path.string());
    }
    return truncate(c.series, order);
  } catch (const CacheFormatError& e) {
    if (warn_) warn_(std::string(e.what()) + "; recomputing");
    return std::nullopt;
  }
}

void SeriesCache::store(const std::string& name, const TruncSeries& s) const {
  fs::create_directories(dir_);
  write_series_file(path_for(name, s.order()), name, s);
}

TruncSeries SeriesCache::get_or_compute(
    const std::string& name, std::size_t order,
    const std::function<TruncSeries(std::size_t)>& compute) const {
  if (auto hit = lookup(name, order)) return std::move(*hit);
  TruncSeries s = compute(order);
  store(name, s);
  return s;
}

}  // namespace mexlab
