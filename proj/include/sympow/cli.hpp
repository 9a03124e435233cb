#pragma once

// Command-line front end: invariant tables, verification suites and ideal
// dumps. Kept in a header so tests can drive it in-process.

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "sympow/containment.hpp"
#include "sympow/dump.hpp"
#include "sympow/errors.hpp"
#include "sympow/groebner.hpp"
#include "sympow/intprog.hpp"
#include "sympow/invariants.hpp"
#include "sympow/varieties.hpp"

namespace sympow::cli {

inline constexpr const char* kVersion = "0.1.0";
inline constexpr int kReportVersion = 1;

enum ExitCode : int { kOk = 0, kMathFailure = 1, kBudget = 2, kUsage = 64 };

struct Budgets {
  std::uint64_t max_pairs = GroebnerConfig{}.max_pairs;
  unsigned max_degree = GroebnerConfig{}.max_degree;
  std::int64_t max_s = SymbolicPowerConfig{}.max_s;
  std::size_t max_generators = SymbolicPowerConfig{}.max_generators;
  std::int64_t max_enumeration_s = EnumerationConfig{}.max_s;
  std::int64_t direct_max_s = ContainmentConfig{}.direct_max_s;
};

struct Config {
  std::string field = "fp:32003";
  Budgets budgets;
  std::string format = "md";
  std::uint64_t seed = 1;
  unsigned threads = 1;
  bool timing = false;
  std::string report_path;

  GroebnerConfig groebner() const { return {budgets.max_pairs, budgets.max_degree, threads}; }
  SymbolicPowerConfig symbolic() const { return {budgets.max_s, budgets.max_generators}; }
  ContainmentConfig containment() const { return {groebner(), symbolic(), budgets.direct_max_s}; }
};

/// 64-bit FNV-1a, printed as 16 hex digits.
inline std::string fnv1a(const std::string& text) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  std::ostringstream out;
  out << std::hex;
  out.width(16);
  out.fill('0');
  out << h;
  return out.str();
}

/// Orders strings with embedded numbers numerically ("s=2" before "s=10").
inline bool natural_less(const std::string& a, const std::string& b) {
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (std::isdigit(static_cast<unsigned char>(a[i])) && std::isdigit(static_cast<unsigned char>(b[j]))) {
      std::size_t i2 = i, j2 = j;
      while (i2 < a.size() && std::isdigit(static_cast<unsigned char>(a[i2]))) ++i2;
      while (j2 < b.size() && std::isdigit(static_cast<unsigned char>(b[j2]))) ++j2;
      auto na = a.substr(i, i2 - i), nb = b.substr(j, j2 - j);
      na.erase(0, std::min(na.find_first_not_of('0'), na.size()));
      nb.erase(0, std::min(nb.find_first_not_of('0'), nb.size()));
      if (na.size() != nb.size()) return na.size() < nb.size();
      if (na != nb) return na < nb;
      i = i2;
      j = j2;
    } else {
      if (a[i] != b[j]) return a[i] < b[j];
      ++i;
      ++j;
    }
  }
  return a.size() - i < b.size() - j;
}

// ---------------------------------------------------------------------------
// Family arguments

struct FamilyArgs {
  std::string family;
  int rows = 0, cols = 0, m = 0, size = 0, n = 0, k = 0, c = 0, ambient = 0;
  std::string cells, constants;
};

inline void add_family_options(CLI::App* app, FamilyArgs& f, bool require = true) {
  auto* opt = app->add_option("--family", f.family,
                              "generic | symmetric | skew (pfaffian) | hankel | ladder | star | self-linked");
  if (require) opt->required();
  app->add_option("--rows", f.rows, "matrix rows (generic, ladder)");
  app->add_option("--cols", f.cols, "matrix columns (generic, ladder)");
  app->add_option("--m", f.m, "sequence length / matrix size");
  app->add_option("--size", f.size, "matrix size (symmetric, skew)");
  app->add_option("--n", f.n, "number of Hankel variables");
  app->add_option("--k", f.k, "Hankel shape k x (n+1-k)");
  app->add_option("--c", f.c, "star configuration codimension");
  app->add_option("--ambient", f.ambient, "star configuration ambient variables");
  app->add_option("--cells", f.cells, "ladder cells as 'i,j;i,j;...' (1-based)");
  app->add_option("--constants", f.constants, "self-linked constants a1,b1,c1,a2,b2,c2");
}

inline std::vector<long> parse_longs(const std::string& text, char sep) {
  std::vector<long> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep)) {
    try {
      std::size_t pos = 0;
      out.push_back(std::stol(item, &pos));
      if (pos != item.size()) throw std::invalid_argument("junk");
    } catch (const std::logic_error&) {
      throw ArgumentError("cannot parse integer '" + item + "'");
    }
  }
  return out;
}

inline SelfLinkedConstants parse_constants(const std::string& text) {
  auto v = parse_longs(text, ',');
  if (v.size() != 6) throw ArgumentError("--constants needs six integers a1,b1,c1,a2,b2,c2");
  return {v[0], v[1], v[2], v[3], v[4], v[5]};
}

inline FamilySpec make_spec(const FamilyArgs& f) {
  auto pick = [](int a, int b) { return a ? a : b; };
  if (f.family == "generic") {
    int r = pick(f.rows, f.m);
    int c = pick(f.cols, r);
    if (!r) throw ArgumentError("generic needs --rows (or --m)");
    return FamilySpec::generic(r, c);
  }
  if (f.family == "symmetric") {
    int s = pick(f.size, f.m);
    if (!s) throw ArgumentError("symmetric needs --size (or --m)");
    return FamilySpec::symmetric(s);
  }
  if (f.family == "skew" || f.family == "pfaffian") {
    int s = pick(f.size, f.m);
    if (!s) throw ArgumentError(f.family + " needs --size (or --m)");
    return FamilySpec::skew(s);
  }
  if (f.family == "hankel") {
    if (!f.n) throw ArgumentError("hankel needs --n");
    return FamilySpec::hankel(f.n, f.k);
  }
  if (f.family == "ladder") {
    if (!f.rows || !f.cols || f.cells.empty()) throw ArgumentError("ladder needs --rows, --cols and --cells");
    std::vector<Cell> cells;
    std::stringstream ss(f.cells);
    std::string item;
    while (std::getline(ss, item, ';')) {
      auto v = parse_longs(item, ',');
      if (v.size() != 2) throw ArgumentError("ladder cell '" + item + "' is not 'i,j'");
      cells.emplace_back(static_cast<int>(v[0]), static_cast<int>(v[1]));
    }
    return FamilySpec::ladder(f.rows, f.cols, std::move(cells));
  }
  if (f.family == "star") {
    if (!f.m) throw ArgumentError("star needs --m");
    return FamilySpec::star(f.m, f.ambient);
  }
  if (f.family == "self-linked" || f.family == "self_linked") {
    return FamilySpec::self_linked(f.constants.empty() ? SelfLinkedConstants{} : parse_constants(f.constants));
  }
  throw ArgumentError("unknown family '" + f.family + "'");
}

/// t from --t, or from --c for star configurations (t = m - c + 1).
inline std::int64_t resolve_t(const FamilySpec& spec, const FamilyArgs& f, std::optional<std::int64_t> t) {
  if (spec.kind() == FamilyKind::star && f.c) {
    if (f.c < 1 || f.c > spec.rows()) throw ArgumentError("star: --c must lie in [1, m]");
    std::int64_t from_c = spec.rows() - f.c + 1;
    if (t && *t != from_c) throw ArgumentError("star: --t and --c disagree");
    return from_c;
  }
  if (!t) throw ArgumentError("--t is required");
  profile_of(spec).check_t(*t);
  return *t;
}

// ---------------------------------------------------------------------------
// Invariant values shared by `invariants` and `table`

/// Whether the pair resurgences are available for the family: the ladder
/// family lacks the decomposition identities they rest on.
inline bool has_pair_resurgence(const FamilySpec& spec) { return spec.kind() != FamilyKind::ladder; }

/// Whether the closure pair applies (the P4-type identity).
inline bool has_closure_pair(const FamilySpec& spec) {
  return spec.kind() != FamilyKind::ladder && spec.kind() != FamilyKind::star &&
         spec.kind() != FamilyKind::self_linked;
}

inline bool has_mn_pair(const FamilySpec& spec, std::int64_t N) {
  if (!has_pair_resurgence(spec)) return false;
  if (spec.kind() == FamilyKind::self_linked) return N == 0;
  return true;
}

/// When the non-asymptotic resurgence of the m^N pair is known to equal the
/// asymptotic one; empty if it is not established.
inline std::optional<std::string> rho_established(const FamilySpec& spec, std::int64_t N, bool char_hypothesis) {
  if (!has_mn_pair(spec, N)) return std::nullopt;
  switch (spec.kind()) {
    case FamilyKind::star: return "star configuration";
    case FamilyKind::hankel: return "Hankel: powers of m^N a_t are integrally closed";
    case FamilyKind::self_linked: return "self-linked ideal";
    case FamilyKind::generic:
    case FamilyKind::symmetric:
    case FamilyKind::skew:
      if (N == 0) return "holds at N = 0";
      if (char_hypothesis) return "asserted characteristic hypothesis";
      return std::nullopt;
    case FamilyKind::ladder: return std::nullopt;
  }
  return std::nullopt;
}

struct TableRow {
  std::int64_t t;
  std::int64_t alpha;
  Rational waldschmidt;
  std::string threshold;
  std::string rho_hat_mn;
  std::string rho_hat_closure;
};

inline TableRow table_row(const FamilySpec& spec, const FamilyProfile& p, std::int64_t t, std::int64_t N) {
  TableRow row{t, p.alpha(t), waldschmidt(p, t), "-", "n/a", "n/a"};
  if (t < p.m()) {
    auto th = chudnovsky_threshold(p, t);
    row.threshold = std::to_string(th.value) + (th.vacuous ? " (vacuous)" : "");
  }
  if (has_mn_pair(spec, N)) row.rho_hat_mn = resurgence_pair_symbolic_vs_mN_power(p, t, N).str();
  if (has_closure_pair(spec)) row.rho_hat_closure = resurgence_pair_symbolic_vs_closure_mN(p, t, N).str();
  return row;
}

struct Cell3 {
  std::string quantity, value, source;
};

inline std::string render_rows(const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows,
                               const std::string& format) {
  std::ostringstream out;
  if (format == "md") {
    out << "|";
    for (const auto& h : header) out << " " << h << " |";
    out << "\n|";
    for (std::size_t i = 0; i < header.size(); ++i) out << "---|";
    out << "\n";
    for (const auto& r : rows) {
      out << "|";
      for (const auto& v : r) out << " " << v << " |";
      out << "\n";
    }
  } else if (format == "csv") {
    auto quote = [](const std::string& v) {
      if (v.find_first_of(",\"") == std::string::npos) return v;
      std::string q = "\"";
      for (char ch : v) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
      return q + "\"";
    };
    for (std::size_t i = 0; i < header.size(); ++i) out << (i ? "," : "") << quote(header[i]);
    out << "\n";
    for (const auto& r : rows) {
      for (std::size_t i = 0; i < r.size(); ++i) out << (i ? "," : "") << quote(r[i]);
      out << "\n";
    }
  } else {
    throw ArgumentError("unknown format '" + format + "'");
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// Reports

struct ReportCheck {
  std::string key, claim, verdict, method, note;
  nlohmann::json witness;  // null when absent
  double seconds = 0;
};

class Report {
 public:
  Report(std::string suite, const Config& config, std::string invocation)
      : suite_(std::move(suite)), config_(config), invocation_(std::move(invocation)) {}

  void add(ReportCheck c) { checks_.push_back(std::move(c)); }
  void set(const std::string& key, nlohmann::json value) { extra_[key] = std::move(value); }

  template <class F>
  void add(const ContainmentReport<F>& r) {
    ReportCheck c{r.key, r.claim, verdict_name(r.verdict), r.method, r.note, nullptr, r.seconds};
    if (r.witness) c.witness = {{"polynomial", r.witness->to_string()}, {"terms", polynomial_to_json(*r.witness)}};
    add(std::move(c));
  }

  int exit_code() const {
    bool fail = false, budget = false;
    for (const auto& c : checks_) {
      fail |= c.verdict == "fails";
      budget |= c.verdict == "budget-exceeded";
    }
    return fail ? kMathFailure : budget ? kBudget : kOk;
  }

  nlohmann::json to_json() const {
    auto sorted = checks_;
    std::stable_sort(sorted.begin(), sorted.end(),
                     [](const ReportCheck& a, const ReportCheck& b) { return natural_less(a.key, b.key); });
    nlohmann::json checks = nlohmann::json::array();
    std::size_t holds = 0, fails = 0, budget = 0;
    double total = 0;
    for (const auto& c : sorted) {
      nlohmann::json j = {{"key", c.key}, {"claim", c.claim}, {"verdict", c.verdict}, {"method", c.method}};
      if (!c.note.empty()) j["note"] = c.note;
      if (!c.witness.is_null()) j["witness"] = c.witness;
      if (config_.timing) j["seconds"] = c.seconds;
      total += c.seconds;
      holds += c.verdict == "holds";
      fails += c.verdict == "fails";
      budget += c.verdict == "budget-exceeded";
      checks.push_back(std::move(j));
    }
    nlohmann::json out;
    out["tool"] = "sympow";
    out["version"] = kVersion;
    out["report_version"] = kReportVersion;
    out["suite"] = suite_;
    out["config"] = config_json();
    out["config_hash"] = fnv1a(invocation_ + "|" + config_json().dump());
    for (const auto& [k, v] : extra_.items()) out[k] = v;
    out["checks"] = std::move(checks);
    out["summary"] = {{"holds", holds}, {"fails", fails}, {"budget_exceeded", budget}};
    if (config_.timing) out["seconds"] = total;
    return out;
  }

 private:
  nlohmann::json config_json() const {
    const auto& b = config_.budgets;
    return {{"field", config_.field},
            {"seed", config_.seed},
            {"threads", config_.threads},
            {"budgets",
             {{"max_pairs", b.max_pairs},
              {"max_degree", b.max_degree},
              {"max_s", b.max_s},
              {"max_generators", b.max_generators},
              {"max_enumeration_s", b.max_enumeration_s},
              {"direct_max_s", b.direct_max_s}}}};
  }

  std::string suite_;
  Config config_;
  std::string invocation_;
  std::vector<ReportCheck> checks_;
  nlohmann::json extra_ = nlohmann::json::object();
};

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

// ---------------------------------------------------------------------------
// Budgets from the environment

inline void apply_env_budgets(Budgets& b) {
  auto read = [](const char* name, auto& target) {
    if (const char* v = std::getenv(name)) {
      try {
        std::size_t pos = 0;
        long long x = std::stoll(v, &pos);
        if (pos != std::string(v).size() || x <= 0) throw std::invalid_argument("bad");
        target = static_cast<std::remove_reference_t<decltype(target)>>(x);
      } catch (const std::logic_error&) {
        throw ArgumentError(std::string(name) + " must be a positive integer");
      }
    }
  };
  read("SYMPOW_BUDGET_MAX_PAIRS", b.max_pairs);
  read("SYMPOW_BUDGET_MAX_DEGREE", b.max_degree);
  read("SYMPOW_BUDGET_MAX_S", b.max_s);
  read("SYMPOW_BUDGET_MAX_GENERATORS", b.max_generators);
  read("SYMPOW_BUDGET_MAX_ENUMERATION_S", b.max_enumeration_s);
  read("SYMPOW_BUDGET_DIRECT_MAX_S", b.direct_max_s);
}

// Runs `body` with the field named in the config.
template <class Body>
auto with_field(const std::string& name, Body&& body) {
  if (name == "qq" || name == "QQ") return body(RationalField());
  if (name.rfind("fp:", 0) == 0) {
    unsigned long p = 0;
    try {
      std::size_t pos = 0;
      p = std::stoul(name.substr(3), &pos);
      if (pos != name.size() - 3) throw std::invalid_argument("junk");
    } catch (const std::logic_error&) {
      throw ArgumentError("bad prime in --field '" + name + "'");
    }
    if (p > 0xffffffffull) throw ArgumentError("prime too large in --field");
    return body(PrimeField(static_cast<std::uint32_t>(p)));
  }
  throw ArgumentError("unknown field '" + name + "' (use qq or fp:<prime>)");
}

// ---------------------------------------------------------------------------
// Commands

inline int cmd_invariants(const FamilyArgs& fa, std::optional<std::int64_t> t_opt, std::int64_t N, bool char_hyp,
                          const Config& config, std::ostream& out) {
  auto spec = make_spec(fa);
  auto p = profile_of(spec);
  auto t = resolve_t(spec, fa, t_opt);
  if (N < 0) throw ArgumentError("--N must be >= 0");
  auto row = table_row(spec, p, t, N);
  std::vector<Cell3> cells;
  cells.push_back({"family", spec.label(), "input"});
  cells.push_back({"profile", "m=" + std::to_string(p.m()) + ", alpha1=" + std::to_string(p.alpha1()), "family"});
  cells.push_back({"t", std::to_string(t), "input"});
  if (spec.kind() == FamilyKind::star) cells.push_back({"c", std::to_string(p.m() - t + 1), "c = m - t + 1"});
  cells.push_back({"N", std::to_string(N), "input"});
  cells.push_back({"alpha(a_t)", std::to_string(row.alpha), "alpha1 + t - 1"});
  cells.push_back({"waldschmidt", row.waldschmidt.str(), "(alpha1 + m - 1)/(m - t + 1)"});
  cells.push_back({"chudnovsky_threshold", t < p.m() ? row.threshold : "none (t = m, bounds hold for all N)",
                   "least N with both bounds: m - t + 1"});
  cells.push_back({"rho_hat(a_t^(s), (m^N a_t)^r)", row.rho_hat_mn, "(N + t)(m - t + 1)/m"});
  auto established = rho_established(spec, N, char_hyp);
  cells.push_back({"rho(a_t^(s), (m^N a_t)^r)", established ? row.rho_hat_mn : "not established",
                   established ? "equals rho_hat: " + *established
                               : "needs the characteristic hypothesis (--assume-char)"});
  cells.push_back({"rho_hat(a_t^(s), closure(m^N a_t^r))", row.rho_hat_closure, "t(m - t + 1)/m"});
  if (spec.kind() == FamilyKind::star) {
    auto star = star_config_invariants(p.m(), p.m() - t + 1);
    cells.push_back({"rho(I_{m,c})", star.resurgence.str(), "c(m - c + 1)/m"});
  }
  if (config.format == "json") {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& c : cells) j.push_back({{"quantity", c.quantity}, {"value", c.value}, {"source", c.source}});
    out << nlohmann::json{{"tool", "sympow"}, {"version", kVersion}, {"invariants", j}}.dump(2) << "\n";
  } else {
    std::vector<std::vector<std::string>> rows;
    for (const auto& c : cells) rows.push_back({c.quantity, c.value, c.source});
    out << render_rows({"quantity", "value", "source"}, rows, config.format);
  }
  return kOk;
}

inline int cmd_table(const FamilyArgs& fa, std::int64_t N, const Config& config, std::ostream& out) {
  auto spec = make_spec(fa);
  auto p = profile_of(spec);
  if (N < 0) throw ArgumentError("--N must be >= 0");
  std::vector<TableRow> rows;
  for (std::int64_t t = 1; t <= p.m(); ++t) rows.push_back(table_row(spec, p, t, N));
  if (config.format == "json") {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& r : rows)
      j.push_back({{"t", r.t},
                   {"alpha", std::to_string(r.alpha)},
                   {"waldschmidt", r.waldschmidt.str()},
                   {"chudnovsky_threshold", r.threshold},
                   {"rho_hat_mN", r.rho_hat_mn},
                   {"rho_hat_closure", r.rho_hat_closure}});
    out << nlohmann::json{{"family", spec.label()},
                          {"m_profile", p.m()},
                          {"alpha1", p.alpha1()},
                          {"N", N},
                          {"rows", j}}
               .dump(2)
        << "\n";
    return kOk;
  }
  std::vector<std::vector<std::string>> cells;
  for (const auto& r : rows)
    cells.push_back({std::to_string(r.t), std::to_string(r.alpha), r.waldschmidt.str(), r.threshold, r.rho_hat_mn,
                     r.rho_hat_closure});
  out << render_rows({"t", "alpha", "waldschmidt", "chudnovsky_threshold", "rho_hat_mN", "rho_hat_closure"}, cells,
                     config.format);
  return kOk;
}

inline void write_report(const Report& report, const Config& config, std::ostream& out) {
  auto text = report.to_json().dump(2) + "\n";
  if (config.report_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(config.report_path, std::ios::binary);
  if (!file) throw ArgumentError("cannot write report to '" + config.report_path + "'");
  file << text;
}

inline int verify_lemmas(std::int64_t max_b, std::int64_t max_len, std::int64_t max_k, Report& report) {
  if (max_b < 1 || max_len < 1 || max_k < 0) throw ArgumentError("lemma bounds must be positive");
  std::size_t cases = 0, failures = 0;
  for (std::int64_t b = 1; b <= max_b; ++b)
    for (std::int64_t len = 1; len <= max_len; ++len)
      for (std::int64_t k = 0; k <= max_k; ++k)
        for (std::int64_t l = 0; l < len; ++l) {
          if (k == 0 && l == 0) continue;
          const std::int64_t weight = k * len + l;
          auto got = min_weighted_sum(b, static_cast<std::size_t>(len), weight);
          const std::int64_t closed = l == 0 ? k * (b + len) : k * (b + len) + b + l;
          ++cases;
          bool ok = got.value == closed && got.witness.weight() == weight;
          std::int64_t wsum = 0;
          for (std::size_t i = 1; i <= got.witness.length(); ++i)
            wsum += (b + static_cast<std::int64_t>(i)) * got.witness[i];
          ok = ok && wsum == got.value;
          if (!ok) {
            ++failures;
            report.add({"lemma/b=" + std::to_string(b) + "/len=" + std::to_string(len) + "/k=" + std::to_string(k) +
                            "/l=" + std::to_string(l),
                        "min sum (b+i) a_i = closed form", "fails", "enumeration",
                        "enumerated " + std::to_string(got.value) + ", closed form " + std::to_string(closed), nullptr,
                        0});
          }
        }
  report.add({"lemmas", "all cases b<=" + std::to_string(max_b) + ", len<=" + std::to_string(max_len) +
                            ", k<=" + std::to_string(max_k),
              failures ? "fails" : "holds", "enumeration",
              std::to_string(cases) + " cases, " + std::to_string(failures) + " mismatches", nullptr, 0});
  return report.exit_code();
}

template <class F>
void verify_alpha(const FamilySpec& spec, F field, std::int64_t t, std::int64_t s_max, const Config& config,
                  Report& report) {
  Family<F> fam(spec, field, config.groebner());
  fam.profile().check_t(t);
  for (std::int64_t s = 1; s <= s_max; ++s) {
    Stopwatch sw;
    ReportCheck c;
    c.key = "alpha/t=" + std::to_string(t) + "/s=" + std::to_string(s);
    c.method = "groebner";
    const auto formula = alpha_symbolic(fam.profile(), t, s);
    c.claim = "alpha(a_" + std::to_string(t) + "^(" + std::to_string(s) + ")) = " + std::to_string(formula);
    try {
      auto enumerated = alpha_by_enumeration(fam.profile(), t, s, {config.budgets.max_enumeration_s});
      auto I = symbolic_power(fam, t, s, config.symbolic());
      auto G = buchberger(I, MonomialOrder::grevlex(), config.groebner());
      const int gb_alpha = G.min_degree();
      const int gen_alpha = I.min_generator_degree();
      bool ok = gb_alpha == formula && gen_alpha == formula && enumerated == formula;
      c.verdict = ok ? "holds" : "fails";
      c.note = "basis " + std::to_string(G.size()) + " elements, basis alpha " + std::to_string(gb_alpha) +
               ", generator alpha " + std::to_string(gen_alpha) + ", enumeration " + std::to_string(enumerated);
    } catch (const BudgetExceeded& e) {
      c.verdict = "budget-exceeded";
      c.note = e.what();
    }
    c.seconds = sw.seconds();
    report.add(std::move(c));
  }
}

template <class F>
void verify_containment(const FamilySpec& spec, F field, std::int64_t t, std::int64_t N, std::int64_t k_max,
                        const std::string& mode, const Config& config, Report& report) {
  Family<F> fam(spec, field, config.groebner());
  std::vector<WitnessMode> modes;
  if (mode == "p3" || mode == "both") modes.push_back(WitnessMode::p3);
  if (mode == "p4" || mode == "both") modes.push_back(WitnessMode::p4);
  if (modes.empty()) throw ArgumentError("--mode must be p3, p4 or both");
  for (auto md : modes)
    for (std::int64_t k = 1; k <= k_max; ++k) {
      Stopwatch sw;
      auto seq = WitnessSequence::make(md, fam.profile(), t, N, k);
      auto reps = verify_witness_containments(fam, t, N, k, md, config.containment());
      const double secs = sw.seconds();
      for (auto& r : reps) {
        r.key = "witness/N=" + std::to_string(N) + "/k=" + std::to_string(k) + "/" + r.key;
        r.seconds = secs / static_cast<double>(reps.size());
        report.add(r);
      }
      if (md == WitnessMode::p3) {
        auto expected = resurgence_pair_symbolic_vs_mN_power(fam.profile(), t, N);
        report.add({"ratio/N=" + std::to_string(N) + "/k=" + std::to_string(k),
                    "s_k/r_k = " + seq.ratio().str() + " equals " + expected.str(),
                    seq.ratio() == expected ? "holds" : "fails", "exact", "", nullptr, 0});
      }
    }
}

template <class F>
void verify_self_linked(const std::optional<SelfLinkedConstants>& given, bool search, F field, const Config& config,
                        Report& report) {
  SelfLinkedConstants k = given.value_or(SelfLinkedConstants{});
  if (search) {
    auto found = search_self_linked_constants(field);
    if (!found) {
      report.add({"self-linked/search", "some tuple in {0,1,-1}^6 passes", "fails", "search", "", nullptr, 0});
      return;
    }
    k = *found;
  }
  Stopwatch sw;
  try {
    auto fx = build_self_linked_fixture(k, field, true, config.groebner());
    const double secs = sw.seconds();
    for (const auto& [name, ok] : fx.checks)
      report.add({"self-linked/" + name, name, ok ? "holds" : "fails", "fixture", "", nullptr, 0});
    auto p = profile_of(FamilySpec::self_linked(k));
    auto wald = waldschmidt(p, 2);
    auto rho = Rational(p.alpha(2)) / wald;
    report.add({"self-linked/waldschmidt", "waldschmidt(I) = 3/2", wald == Rational(3, 2) ? "holds" : "fails",
                "formula", wald.str(), nullptr, 0});
    report.add({"self-linked/rho", "rho(I) = alpha/waldschmidt = 4/3", rho == Rational(4, 3) ? "holds" : "fails",
                "formula", rho.str(), nullptr, 0});
    report.set("self_linked", {{"constants", k.str()},
                               {"f", {fx.f[0].to_string(), fx.f[1].to_string(), fx.f[2].to_string()}},
                               {"w", fx.w.to_string()},
                               {"deg_w", fx.w.degree()},
                               {"mu", fx.mu},
                               {"waldschmidt", wald.str()},
                               {"rho", rho.str()}});
    if (config.timing) report.set("self_linked_seconds", secs);
  } catch (const FixtureInvalid& e) {
    report.add({"self-linked/fixture", "fixture " + k.str() + " is valid", "fails", "fixture", e.what(), nullptr, 0});
  }
}

template <class F>
void verify_star(int m, F field, const Config& config, Report& report) {
  Family<F> fam(FamilySpec::star(m), field, config.groebner());
  for (std::int64_t t = 1; t <= m; ++t) {
    ReportCheck c;
    c.key = "star/m=" + std::to_string(m) + "/t=" + std::to_string(t);
    c.claim = "intersection form of I_{m,c} equals product form, c = " + std::to_string(m - t + 1);
    c.method = "groebner";
    try {
      bool eq = ideal_equal(fam.member(t), fam.star_product_form(t), MonomialOrder::grevlex(), config.groebner());
      bool deg = fam.member(t).min_generator_degree() == t;
      c.verdict = eq && deg ? "holds" : "fails";
    } catch (const BudgetExceeded& e) {
      c.verdict = "budget-exceeded";
      c.note = e.what();
    }
    report.add(std::move(c));
  }
}

inline std::string join_args(int argc, const char* const* argv) {
  std::string s;
  for (int i = 1; i < argc; ++i) s += std::string(i > 1 ? " " : "") + argv[i];
  return s;
}

/// Entry point; returns the process exit code.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"sympow: symbolic-power invariants and their verification", "sympow"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  Config config;
  std::optional<std::uint64_t> max_pairs, max_enum;
  std::optional<unsigned> max_degree;
  std::optional<std::int64_t> max_s, direct_max_s;
  std::optional<std::size_t> max_gens;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--field", config.field, "qq or fp:<prime>");
    sub->add_option("--format", config.format, "md | csv | json")->check(CLI::IsMember({"md", "csv", "json"}));
    sub->add_option("--seed", config.seed, "seed for shuffled sweeps");
    sub->add_option("--threads", config.threads, "threads for pair reduction")->check(CLI::PositiveNumber);
    sub->add_option("--max-pairs", max_pairs, "S-pair budget")->check(CLI::PositiveNumber);
    sub->add_option("--max-degree", max_degree, "degree budget")->check(CLI::PositiveNumber);
    sub->add_option("--max-s", max_s, "largest materialized symbolic exponent")->check(CLI::PositiveNumber);
    sub->add_option("--max-generators", max_gens, "generator budget")->check(CLI::PositiveNumber);
    sub->add_option("--max-enumeration-s", max_enum, "enumeration bound")->check(CLI::PositiveNumber);
    sub->add_option("--direct-max-s", direct_max_s, "largest exponent checked directly")->check(CLI::PositiveNumber);
    sub->add_flag("--timing", config.timing, "include timings in reports");
    sub->add_option("--report", config.report_path, "write the JSON report to this file");
  };

  FamilyArgs fam_args;
  std::optional<std::int64_t> t_opt;
  std::int64_t N = 0;
  bool char_hyp = false;

  auto* inv = app.add_subcommand("invariants", "closed-form invariants of one member of a family");
  add_family_options(inv, fam_args);
  inv->add_option("--t", t_opt, "position in the sequence");
  inv->add_option("--N", N, "power of the maximal ideal in the pair");
  inv->add_flag("--assume-char", char_hyp, "assert the characteristic hypothesis for rho");
  add_common(inv);

  auto* table = app.add_subcommand("table", "invariants across every t of a family");
  add_family_options(table, fam_args);
  table->add_option("--N", N, "power of the maximal ideal in the pair");
  add_common(table);

  std::string suite;
  std::int64_t max_b = 6, max_len = 6, max_k = 5, s_max = 3, k_max = 1;
  std::string mode = "both";
  bool self_linked = false, search = false;
  int star_m = 0;
  auto* verify = app.add_subcommand("verify", "run a verification suite and emit a JSON report");
  verify->add_option("suite", suite, "lemmas | alpha | containment | fixtures")
      ->required()
      ->check(CLI::IsMember({"lemmas", "alpha", "containment", "fixtures"}));
  add_family_options(verify, fam_args, false);
  verify->add_option("--t", t_opt, "position in the sequence");
  verify->add_option("--N", N, "power of the maximal ideal");
  verify->add_option("--max-b", max_b, "lemmas: largest b");
  verify->add_option("--max-len", max_len, "lemmas: largest length");
  verify->add_option("--max-k", max_k, "lemmas: largest k; containment: largest k");
  verify->add_option("--s-max", s_max, "alpha: largest s");
  verify->add_option("--mode", mode, "containment: p3 | p4 | both");
  verify->add_flag("--self-linked", self_linked, "fixtures: self-linked ideal");
  verify->add_flag("--search", search, "fixtures: search constants in {0,1,-1}^6");
  verify->add_option("--star", star_m, "fixtures: star configuration with this m");
  add_common(verify);

  std::optional<std::int64_t> dump_s;
  bool dump_basis = false;
  auto* dump = app.add_subcommand("dump", "dump a_t^(s) (or its reduced basis) as JSON");
  add_family_options(dump, fam_args);
  dump->add_option("--t", t_opt, "position in the sequence");
  dump->add_option("--s", dump_s, "symbolic exponent (default 1)");
  dump->add_flag("--basis", dump_basis, "dump the reduced Groebner basis instead of the generators");
  add_common(dump);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    apply_env_budgets(config.budgets);
    if (max_pairs) config.budgets.max_pairs = *max_pairs;
    if (max_degree) config.budgets.max_degree = *max_degree;
    if (max_s) config.budgets.max_s = *max_s;
    if (max_gens) config.budgets.max_generators = *max_gens;
    if (max_enum) config.budgets.max_enumeration_s = static_cast<std::int64_t>(*max_enum);
    if (direct_max_s) config.budgets.direct_max_s = *direct_max_s;
    with_field(config.field, [](auto) { return 0; });  // validates the field early

    if (*inv) return cmd_invariants(fam_args, t_opt, N, char_hyp, config, out);
    if (*table) return cmd_table(fam_args, N, config, out);

    if (*dump) {
      auto spec = make_spec(fam_args);
      auto t = resolve_t(spec, fam_args, t_opt);
      return with_field(config.field, [&](auto field) {
        using F = decltype(field);
        Family<F> fam(spec, field, config.groebner());
        auto I = symbolic_power(fam, t, dump_s.value_or(1), config.symbolic());
        if (dump_basis) I = buchberger(I, MonomialOrder::grevlex(), config.groebner()).ideal();
        out << dump_ideal(I) << "\n";
        return static_cast<int>(kOk);
      });
    }

    Report report(suite, config, join_args(argc, argv));
    if (suite == "lemmas") {
      verify_lemmas(max_b, max_len, max_k, report);
    } else if (suite == "alpha") {
      auto spec = make_spec(fam_args);
      auto t = resolve_t(spec, fam_args, t_opt);
      report.set("family", spec.label());
      with_field(config.field, [&](auto field) {
        verify_alpha(spec, field, t, s_max, config, report);
        return 0;
      });
    } else if (suite == "containment") {
      auto spec = make_spec(fam_args);
      auto t = resolve_t(spec, fam_args, t_opt);
      report.set("family", spec.label());
      with_field(config.field, [&](auto field) {
        verify_containment(spec, field, t, N, max_k == 5 ? k_max : max_k, mode, config, report);
        return 0;
      });
    } else {
      if (!self_linked && !star_m) {
        self_linked = true;
        star_m = 4;
      }
      std::optional<SelfLinkedConstants> given;
      if (!fam_args.constants.empty()) given = parse_constants(fam_args.constants);
      with_field(config.field, [&](auto field) {
        if (self_linked) verify_self_linked(given, search, field, config, report);
        if (star_m) verify_star(star_m, field, config, report);
        return 0;
      });
    }
    write_report(report, config, out);
    return report.exit_code();
  } catch (const ArgumentError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << "\n";
    return kBudget;
  } catch (const FixtureInvalid& e) {
    err << "fixture invalid: " << e.what() << "\n";
    return kMathFailure;
  }
}

}  // namespace sympow::cli
