#include "mexlab/cli.hpp"

#include <omp.h>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "mexlab/asymptotics.hpp"
#include "mexlab/cache.hpp"
#include "mexlab/errors.hpp"
#include "mexlab/eta.hpp"
#include "mexlab/mex_series.hpp"
#include "mexlab/report.hpp"
#include "mexlab/theta.hpp"

namespace mexlab {

using json = nlohmann::ordered_json;

namespace {

std::uint64_t parse_u64(const std::string& s) {
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) {
    throw UsageError("expected a non-negative integer, got '" + s + "'");
  }
  try {
    return std::stoull(s);
  } catch (const std::out_of_range&) {
    throw UsageError("integer out of range: " + s);
  }
}

}  // namespace

std::vector<std::uint64_t> parse_index_list(const std::string& text) {
  std::vector<std::uint64_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto dots = item.find("..");
    if (dots == std::string::npos) {
      out.push_back(parse_u64(item));
      continue;
    }
    const std::uint64_t lo = parse_u64(item.substr(0, dots));
    const std::uint64_t hi = parse_u64(item.substr(dots + 2));
    if (lo > hi) throw UsageError("empty range '" + item + "'");
    if (hi - lo > 10'000'000) throw UsageError("range too long: '" + item + "'");
    for (std::uint64_t i = 0; i <= hi - lo; ++i) out.push_back(lo + i);
  }
  if (out.empty()) throw UsageError("empty index list");
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

struct Opts {
  std::uint64_t order = 0;  // 0: command default
  std::string format;
  int jobs = 0;
  std::string cache;
  long precision = 0;
  std::string which;
  std::string range;
  std::string suite;
  std::string out_file;
  std::string mods = "2,4,8";
  std::string xs = "1000,10000,100000";
  std::string series = "G_o,G_e";
  std::string ns;
  std::string ps = "5,7,11";
  std::string ks = "1..6";
  unsigned witness_k = 3;
  std::uint64_t m = 0;
  std::uint64_t r = 0;
};

struct Context {
  std::ostream& out;
  std::ostream& err;
  std::optional<SeriesCache> cache;
  mpfr_prec_t precision = kDefaultPrecision;
};

TruncSeries load(Context& ctx, Sequence s, std::size_t order) {
  auto compute = [s](std::size_t n) { return sequence_series(s, n); };
  if (!ctx.cache) return compute(order);
  return ctx.cache->get_or_compute(std::string(sequence_name(s)), order, compute);
}

MexSeries load_g(Context& ctx, std::size_t order) {
  if (!ctx.cache) return g_series(order);
  std::optional<MexSeries> both;
  auto half = [&both](bool odd) {
    return [&both, odd](std::size_t n) {
      if (!both || both->odd.order() != n) both = g_series(n);
      return odd ? both->odd : both->even;
    };
  };
  return {ctx.cache->get_or_compute("sigma_o", order, half(true)),
          ctx.cache->get_or_compute("sigma_e", order, half(false))};
}

const TruncSeries& pick(const MexSeries& g, const TruncSeries& sigma, const TruncSeries& a,
                        Sequence s) {
  switch (s) {
    case Sequence::sigma_o: return g.odd;
    case Sequence::sigma_e: return g.even;
    case Sequence::sigma: return sigma;
    case Sequence::a: return a;
  }
  return a;
}

std::string format_or(const Opts& o, const char* fallback) {
  return o.format.empty() ? fallback : o.format;
}

void emit_values(Context& ctx, const std::string& fmt, const std::string& name,
                 const std::vector<std::pair<std::uint64_t, mpz_class>>& values) {
  if (fmt == "json") {
    json j;
    j["which"] = name;
    j["values"] = json::array();
    for (const auto& [n, v] : values) j["values"].push_back({{"n", n}, {"value", v.get_str()}});
    ctx.out << j.dump(2) << '\n';
  } else if (fmt == "csv") {
    ctx.out << "n,value\n";
    for (const auto& [n, v] : values) ctx.out << n << ',' << v.get_str() << '\n';
  } else {
    for (std::size_t i = 0; i < values.size(); ++i) {
      ctx.out << (i ? " " : "") << values[i].second.get_str();
    }
    ctx.out << '\n';
  }
}

int cmd_compute(Context& ctx, const Opts& o) {
  const Sequence s = parse_sequence(o.which);
  const auto ns = parse_index_list(o.range);
  const std::size_t order = std::max<std::uint64_t>(ns.back(), o.order);
  const TruncSeries series = load(ctx, s, order);
  std::vector<std::pair<std::uint64_t, mpz_class>> values;
  for (std::uint64_t n : ns) values.emplace_back(n, series[n]);
  emit_values(ctx, format_or(o, "text"), std::string(sequence_name(s)), values);
  return 0;
}

// ---- verify ----

struct SuiteReport {
  std::string name;
  json entries = json::array();
  json extra = json::object();
  bool pass = true;

  void add(const Verdict& v, json context = json::object()) {
    json e = std::move(context);
    e.update(to_json(v));
    entries.push_back(std::move(e));
    pass = pass && v.pass;
  }

  json to_json_report() const {
    json j;
    j["suite"] = name;
    j["status"] = pass ? "pass" : "fail";
    j["verdicts"] = entries;
    for (const auto& [k, v] : extra.items()) j[k] = v;
    return j;
  }
};

SuiteReport suite_congruences(Context& ctx, const Opts& o) {
  const std::size_t order = o.order ? o.order : 10000;
  SuiteReport rep{"congruences"};
  const MexSeries g = load_g(ctx, order);
  const TruncSeries sigma = load(ctx, Sequence::sigma, order);
  const TruncSeries a = load(ctx, Sequence::a, order);
  for (const auto& t : fixed_congruences()) {
    rep.add(check_congruence(pick(g, sigma, a, t.sequence), t), {{"label", t.label}});
  }
  rep.extra["order"] = order;
  return rep;
}

SuiteReport suite_families(Context& ctx, const Opts& o) {
  SuiteReport rep{"families"};
  for (std::uint64_t p : parse_index_list(o.ps)) {
    if (!is_prime(p) || p < 5) throw UsageError("families: p must be a prime >= 5, got " + std::to_string(p));
    const std::size_t order = std::max<std::size_t>(family_order(p), o.order);
    const MexSeries g = load_g(ctx, order);
    for (int part = 1; part <= 3; ++part) {
      std::vector<CongruenceTarget> targets;
      try {
        targets = family_targets({p, part, {}});
      } catch (const InvalidFamily&) {
        continue;
      }
      for (const auto& t : targets) {
        const TruncSeries& s = t.sequence == Sequence::sigma_o ? g.odd : g.even;
        rep.add(check_congruence(s, t), {{"p", p}, {"part", part}, {"order", order}});
      }
    }
    rep.add(progression_equality_check(g, p), {{"p", p}, {"order", order}});
  }
  return rep;
}

SuiteReport suite_cooper(Context& ctx, const Opts& o) {
  const std::size_t order = o.order ? o.order : 2000;
  SuiteReport rep{"cooper"};
  const TruncSeries a = load(ctx, Sequence::a, order);
  for (std::uint64_t p : parse_index_list(o.ps)) {
    rep.add(cooper_check(p, a), {{"p", p}, {"epsilon", cooper_epsilon(p)}});
  }
  rep.extra["order"] = order;
  return rep;
}

SuiteReport suite_identities(const Opts& o) {
  SuiteConfig cfg;
  if (o.order) {
    cfg.congruence_order = o.order;
    cfg.exact_order = std::min<std::size_t>(cfg.exact_order, o.order);
  }
  SuiteReport rep{"identities"};
  for (const auto& r : verify_identity_suite(cfg)) rep.add(r.verdict, {{"id", r.id}});
  rep.extra["exact_order"] = cfg.exact_order;
  rep.extra["congruence_order"] = cfg.congruence_order;
  return rep;
}

std::vector<unsigned> parse_ks(const std::string& text) {
  std::vector<unsigned> ks;
  for (std::uint64_t k : parse_index_list(text)) {
    if (k < 1 || k > 60) throw UsageError("--k must lie in 1..60");
    ks.push_back(static_cast<unsigned>(k));
  }
  return ks;
}

Verdict holomorphy_verdict(const std::string& claim, const EtaQuotient& e, const HolomorphyReport& h) {
  const auto checked = divisors(e.level).size();
  if (h.ok) return Verdict::passed(claim, checked);
  return {claim, false, checked, std::nullopt};
}

// Builds the eta report; the S-table and the weight bookkeeping ride along as extras.
SuiteReport suite_eta(const Opts& o) {
  const std::size_t witness_order = o.order ? o.order : 600;
  SuiteReport rep{"eta"};

  const EtaQuotient b = build_B_star();
  const HolomorphyReport hb = is_holomorphic_modular_form(b);
  rep.add(holomorphy_verdict("B* holomorphic modular form", b, hb), {{"form", "B*"}});
  rep.extra["B*"] = {{"quotient", to_json(b)}, {"holomorphy", to_json(hb)}};

  json forms = json::array();
  for (unsigned k : parse_ks(o.ks)) {
    const EtaQuotient a = build_A_k(k);
    const HolomorphyReport h = is_holomorphic_modular_form(a);
    const mpz_class expected = mpz_class(1) << (k - 1);
    const mpz_class exponent_sum = mpz_class(1) << k;
    const std::string name = "A_" + std::to_string(k);
    rep.add(holomorphy_verdict(name + " holomorphic modular form of weight 2^(k-1)", a,
                               h.ok && h.weight == expected ? h : HolomorphyReport{}),
            {{"form", name}});

    json f;
    f["k"] = k;
    f["quotient"] = to_json(a);
    f["holomorphy"] = to_json(h);
    f["weight"] = rational_string(h.weight);
    f["exponent_sum"] = exponent_sum.get_str();
    f["weight_note"] = "weight is half the exponent sum: 2^(k-1), not 2^k";
    f["character_note"] = k == 1 ? "odd weight: character (-1/.) is nontrivial"
                                 : "even weight and square s: trivial character";
    json table = json::array();
    for (const auto& row : s_table(k)) table.push_back(to_json(row));
    f["s_table"] = table;
    if (k <= o.witness_k) {
      const Verdict w = congruence_witness(k, witness_order);
      rep.add(w, {{"form", name}, {"order", witness_order}});
      f["witness"] = to_json(w);
    } else {
      f["witness"] = nullptr;
    }
    forms.push_back(std::move(f));
  }
  rep.extra["A_k"] = std::move(forms);
  return rep;
}

void write_report(Context& ctx, const Opts& o, const json& j) {
  if (o.out_file.empty()) {
    ctx.out << j.dump(2) << '\n';
    return;
  }
  std::ofstream f(o.out_file);
  if (!f) throw UsageError("cannot open report file " + o.out_file);
  f << j.dump(2) << '\n';
}

std::string text_summary(const SuiteReport& rep) {
  std::ostringstream os;
  for (const auto& e : rep.entries) {
    os << (e["status"] == "pass" ? "PASS " : "FAIL ") << e["claim"].get<std::string>()
       << " (checked " << e["checked"].get<std::uint64_t>() << ")";
    if (!e["counterexample"].is_null()) {
      os << " counterexample n=" << e["counterexample"]["n"].get<std::uint64_t>()
         << " value=" << e["counterexample"]["value"].get<std::string>();
    }
    os << '\n';
  }
  os << rep.name << ": " << (rep.pass ? "pass" : "fail") << '\n';
  return os.str();
}

int cmd_verify(Context& ctx, const Opts& o) {
  std::vector<std::string> names;
  if (o.suite == "all") names = {"congruences", "identities", "families", "cooper", "eta"};
  else names = {o.suite};

  std::vector<SuiteReport> reps;
  for (const auto& n : names) {
    if (n == "congruences") reps.push_back(suite_congruences(ctx, o));
    else if (n == "identities") reps.push_back(suite_identities(o));
    else if (n == "families") reps.push_back(suite_families(ctx, o));
    else if (n == "cooper") reps.push_back(suite_cooper(ctx, o));
    else reps.push_back(suite_eta(o));
  }
  const bool pass = std::all_of(reps.begin(), reps.end(), [](const auto& r) { return r.pass; });

  if (format_or(o, "json") == "text") {
    std::ostringstream os;
    for (const auto& r : reps) os << text_summary(r);
    if (o.out_file.empty()) {
      ctx.out << os.str();
    } else {
      std::ofstream f(o.out_file);
      if (!f) throw UsageError("cannot open report file " + o.out_file);
      f << os.str();
    }
  } else if (reps.size() == 1) {
    write_report(ctx, o, reps.front().to_json_report());
  } else {
    json j;
    j["suite"] = "all";
    j["status"] = pass ? "pass" : "fail";
    j["suites"] = json::array();
    for (const auto& r : reps) j["suites"].push_back(r.to_json_report());
    write_report(ctx, o, j);
  }
  return pass ? 0 : 1;
}

// ---- density ----

int cmd_density(Context& ctx, const Opts& o) {
  const auto mods = parse_index_list(o.mods);
  const auto xs = parse_index_list(o.xs);
  const std::size_t order = std::max<std::uint64_t>(xs.back(), o.order);

  struct Group {
    std::string series;
    std::uint64_t modulus;
    std::vector<DensityPoint> points;
    bool monotone;
  };
  std::vector<Group> groups;
  std::stringstream ss(o.series);
  std::string name;
  std::optional<MexSeries> g;
  while (std::getline(ss, name, ',')) {
    TruncSeries s;
    if (name == "zero") {
      s = TruncSeries(order);
    } else {
      const Sequence seq = parse_sequence(name);
      if (seq == Sequence::sigma_o || seq == Sequence::sigma_e) {
        if (!g) g = load_g(ctx, order);
        s = seq == Sequence::sigma_o ? g->odd : g->even;
      } else {
        s = load(ctx, seq, order);
      }
    }
    for (std::uint64_t m : mods) {
      auto pts = density_scan(s, mpz_class(static_cast<unsigned long>(m)), {xs.begin(), xs.end()});
      bool mono = true;
      for (std::size_t i = 1; i < pts.size(); ++i) mono = mono && pts[i - 1].delta <= pts[i].delta;
      groups.push_back({name, m, std::move(pts), mono});
    }
  }

  const std::string fmt = format_or(o, "csv");
  if (fmt == "json") {
    json j = json::array();
    for (const auto& gr : groups) {
      json pts = json::array();
      for (const auto& p : gr.points) pts.push_back({{"X", p.x}, {"delta", rational_string(p.delta)}});
      j.push_back({{"series", gr.series}, {"M", gr.modulus}, {"points", pts}, {"monotone", gr.monotone}});
    }
    ctx.out << j.dump(2) << '\n';
  } else {
    const char sep = fmt == "csv" ? ',' : ' ';
    ctx.out << "series" << sep << "M" << sep << "X" << sep << "delta" << sep << "monotone\n";
    for (const auto& gr : groups) {
      for (const auto& p : gr.points) {
        ctx.out << gr.series << sep << gr.modulus << sep << p.x << sep << rational_string(p.delta) << sep
                << (gr.monotone ? "true" : "false") << '\n';
      }
    }
  }
  return 0;
}

// ---- asym ----

constexpr int kDigits = 30;

int cmd_asym(Context& ctx, const Opts& o) {
  const auto ns = parse_index_list(o.ns);
  if (ns.front() == 0) throw UsageError("asym: checkpoints must be positive");
  if (o.order && o.order < ns.back()) {
    throw UsageError("asym: checkpoint " + std::to_string(ns.back()) + " exceeds order " +
                     std::to_string(o.order) + "; needs --order " + std::to_string(ns.back()));
  }
  const std::size_t order = o.order ? o.order : ns.back();
  const MexSeries g = load_g(ctx, order);
  const std::string fmt = format_or(o, "csv");
  const std::vector<std::uint64_t> cps(ns.begin(), ns.end());
  const mpfr_prec_t prec = ctx.precision;

  if (o.which == "pair") {
    json rows = json::array();
    if (fmt != "json") ctx.out << "n,sigma_o,sigma_e,odd_even_ratio,distance\n";
    for (std::uint64_t n : cps) {
      if (g.even[n] == 0) throw UsageError("asym: sigma_e(" + std::to_string(n) + ") is zero");
      const BigReal ratio = BigReal(g.odd[n], prec) / BigReal(g.even[n], prec);
      const BigReal dist = abs(ratio - BigReal(1L, prec));
      if (fmt == "json") {
        rows.push_back({{"n", n},
                        {"sigma_o", g.odd[n].get_str()},
                        {"sigma_e", g.even[n].get_str()},
                        {"odd_even_ratio", ratio.to_string(kDigits)},
                        {"distance", dist.to_string(kDigits)}});
      } else {
        ctx.out << n << ',' << g.odd[n].get_str() << ',' << g.even[n].get_str() << ','
                << ratio.to_string(kDigits) << ',' << dist.to_string(kDigits) << '\n';
      }
    }
    if (fmt == "json") ctx.out << rows.dump(2) << '\n';
    return 0;
  }

  const Sequence s = parse_sequence(o.which);
  const auto rows = ratio_report(s, g, cps, prec);
  if (fmt == "json") {
    json j = json::array();
    for (const auto& r : rows) {
      json e{{"n", r.n},
             {"coefficient", r.coefficient.get_str()},
             {"main_term", r.main_term.to_string(kDigits)},
             {"ratio", r.ratio.to_string(kDigits)}};
      if (r.odd_even_ratio) e["odd_even_ratio"] = r.odd_even_ratio->to_string(kDigits);
      j.push_back(std::move(e));
    }
    ctx.out << j.dump(2) << '\n';
  } else {
    ctx.out << ratio_csv(rows, kDigits);
  }
  return 0;
}

// ---- dissect ----

int cmd_dissect(Context& ctx, const Opts& o) {
  if (o.m == 0 || o.r >= o.m) throw UsageError("dissect: need 0 <= r < m");
  const Sequence s = parse_sequence(o.which);
  const std::size_t order = o.order ? o.order : 100;
  if (order < o.r) throw UsageError("dissect: order below r");
  const TruncSeries d = dissect(load(ctx, s, order), o.m, o.r);
  std::vector<std::pair<std::uint64_t, mpz_class>> values;
  for (std::size_t n = 0; n <= d.order(); ++n) values.emplace_back(n, d[n]);
  emit_values(ctx, format_or(o, "text"), std::string(sequence_name(s)), values);
  return 0;
}

// ---- eta ----

int cmd_eta(Context& ctx, const Opts& o) {
  const SuiteReport rep = suite_eta(o);
  const std::string fmt = format_or(o, "json");
  if (fmt == "csv") {
    bool header = false;
    for (const auto& f : rep.extra["A_k"]) {
      std::istringstream rows(s_table_csv(s_table(f["k"].get<unsigned>())));
      std::string line;
      bool first = true;
      while (std::getline(rows, line)) {
        if (first) {
          first = false;
          if (header) continue;
          ctx.out << "k," << line << '\n';
          header = true;
          continue;
        }
        ctx.out << f["k"].get<unsigned>() << ',' << line << '\n';
      }
    }
  } else if (fmt == "text") {
    for (const auto& f : rep.extra["A_k"]) {
      ctx.out << "A_" << f["k"].get<unsigned>() << ": weight " << f["weight"].get<std::string>()
              << " (exponent sum " << f["exponent_sum"].get<std::string>() << "), character "
              << f["holomorphy"]["character"].get<std::string>() << ", holomorphic "
              << (f["holomorphy"]["ok"].get<bool>() ? "yes" : "no") << '\n';
      for (const auto& row : f["s_table"]) {
        ctx.out << "  d=" << row["d"].get<std::uint64_t>() << " S=" << row["S"].get<std::string>()
                << " order=" << row["cusp_order"].get<std::string>() << '\n';
      }
    }
    ctx.out << text_summary(rep);
  } else {
    ctx.out << rep.to_json_report().dump(2) << '\n';
  }
  return rep.pass ? 0 : 1;
}

mpfr_prec_t resolve_precision(const Opts& o) {
  long bits = o.precision;
  if (bits == 0) {
    if (const char* env = std::getenv("MEXLAB_PRECISION"); env && *env) {
      const std::uint64_t v = parse_u64(env);
      if (v > static_cast<std::uint64_t>(std::numeric_limits<long>::max())) {
        throw UsageError("MEXLAB_PRECISION out of range");
      }
      bits = static_cast<long>(v);
    } else {
      bits = kDefaultPrecision;
    }
  }
  if (bits < 64) throw UsageError("precision must be at least 64 bits");
  return static_cast<mpfr_prec_t>(bits);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact q-series experiments on minimal excludant sums"};
  app.name("mexlab");
  app.require_subcommand(1, 1);
  Opts o;

  auto common = [&o](CLI::App* sub, std::vector<std::string> formats) {
    sub->add_option("--order", o.order, "Series order");
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember(formats));
    sub->add_option("--jobs", o.jobs, "Worker threads (0: runtime default)")->check(CLI::NonNegativeNumber);
    sub->add_option("--cache", o.cache, "Series cache directory (or MEXLAB_CACHE_DIR)");
    sub->add_option("--precision", o.precision, "Real precision in bits (or MEXLAB_PRECISION)");
  };

  auto* compute = app.add_subcommand("compute", "Exact coefficients");
  compute->add_option("range", o.range, "n, a..b or a comma list")->required();
  compute->add_option("--which", o.which, "sigma_o|sigma_e|sigma|a")->required();
  common(compute, {"text", "csv", "json"});

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("suite", o.suite)
      ->required()
      ->check(CLI::IsMember({"congruences", "identities", "families", "cooper", "eta", "all"}));
  verify->add_option("--p", o.ps, "Primes for families/cooper");
  verify->add_option("--k", o.ks, "k values for eta");
  verify->add_option("--witness-k", o.witness_k, "Largest k given a series witness");
  verify->add_option("--out", o.out_file, "Write the report here instead of stdout");
  common(verify, {"json", "text"});

  auto* density = app.add_subcommand("density", "Proportion of coefficients divisible by M");
  density->add_option("--series", o.series, "Comma list: G_o, G_e, sigma, a, zero");
  density->add_option("--mod", o.mods, "Moduli");
  density->add_option("--X", o.xs, "Checkpoints");
  common(density, {"csv", "json", "text"});

  auto* asym = app.add_subcommand("asym", "Coefficients against the asymptotic main term");
  asym->add_option("--which", o.which, "sigma_o|sigma_e|sigma|pair")->required();
  asym->add_option("--n", o.ns, "Checkpoints")->required();
  common(asym, {"csv", "json"});

  auto* dis = app.add_subcommand("dissect", "Coefficients along m n + r");
  dis->add_option("--which", o.which, "sigma_o|sigma_e|sigma|a")->required();
  dis->add_option("--m", o.m)->required();
  dis->add_option("--r", o.r)->required();
  common(dis, {"text", "csv", "json"});

  auto* eta = app.add_subcommand("eta", "Eta-quotient report");
  eta->add_option("--k", o.ks, "k values");
  eta->add_option("--witness-k", o.witness_k, "Largest k given a series witness");
  common(eta, {"json", "csv", "text"});

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    Context ctx{out, err, std::nullopt, resolve_precision(o)};
    if (o.jobs > 0) omp_set_num_threads(o.jobs);
    std::string dir = o.cache;
    if (dir.empty()) {
      if (const char* env = std::getenv("MEXLAB_CACHE_DIR")) dir = env;
    }
    if (!dir.empty()) {
      ctx.cache.emplace(dir, [&err](const std::string& msg) { err << "warning: " << msg << '\n'; });
    }

    if (compute->parsed()) return cmd_compute(ctx, o);
    if (verify->parsed()) return cmd_verify(ctx, o);
    if (density->parsed()) return cmd_density(ctx, o);
    if (asym->parsed()) return cmd_asym(ctx, o);
    if (dis->parsed()) return cmd_dissect(ctx, o);
    return cmd_eta(ctx, o);
  } catch (const std::exception& e) {
    err << "mexlab: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace mexlab
