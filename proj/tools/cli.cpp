#include "dq/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include "dq/alpha.hpp"
#include "dq/certify.hpp"
#include "dq/config.hpp"
#include "dq/counting.hpp"
#include "dq/divisor_sums.hpp"
#include "dq/errors.hpp"
#include "dq/expr.hpp"
#include "dq/logforms.hpp"
#include "dq/prime_swap.hpp"
#include "dq/tuples.hpp"

namespace dq {
namespace {

using json = nlohmann::ordered_json;

enum class Format { Table, Records };

struct Cell {
  std::string text;
  std::optional<Interval> value;

  Cell(std::string s) : text(std::move(s)) {}  // NOLINT(google-explicit-constructor)
  Cell(const char* s) : text(s) {}             // NOLINT(google-explicit-constructor)
  Cell(const Interval& v, int digits = 10) : text(v.str(digits)), value(v) {}  // NOLINT
};

std::string num(double v, int digits = 10) {
  std::ostringstream os;
  os << std::setprecision(digits) << v;
  return os.str();
}

// Collects sections and writes them as aligned text tables or as one JSON
// object per row.
class Report {
 public:
  Report(Format format, std::ostream& out) : format_(format), out_(out) {}

  void section(const std::string& title, std::vector<std::string> columns, const std::vector<std::vector<Cell>>& rows) {
    if (format_ == Format::Records) {
      for (const auto& row : rows) {
        json j;
        j["section"] = title;
        for (std::size_t i = 0; i < columns.size() && i < row.size(); ++i) {
          if (row[i].value) {
            j[columns[i]] = {{"lo", num(row[i].value->lower(), 17)}, {"hi", num(row[i].value->upper(), 17)}};
          } else {
            j[columns[i]] = row[i].text;
          }
        }
        out_ << j.dump() << '\n';
      }
      return;
    }
    std::vector<std::size_t> width(columns.size());
    for (std::size_t i = 0; i < columns.size(); ++i) width[i] = columns[i].size();
    for (const auto& row : rows)
      for (std::size_t i = 0; i < row.size() && i < width.size(); ++i) width[i] = std::max(width[i], row[i].text.size());
    out_ << "== " << title << " ==\n";
    auto line = [&](auto cell) {
      for (std::size_t i = 0; i < columns.size(); ++i) {
        const std::string s = cell(i);
        out_ << s;
        if (i + 1 < columns.size()) out_ << std::string(width[i] - s.size() + 2, ' ');
      }
      out_ << '\n';
    };
    line([&](std::size_t i) { return columns[i]; });
    for (const auto& row : rows) line([&](std::size_t i) { return i < row.size() ? row[i].text : std::string(); });
    out_ << '\n';
  }

  void text(const std::string& s) {
    if (format_ == Format::Table) out_ << s << '\n';
  }

  Format format() const { return format_; }

 private:
  Format format_;
  std::ostream& out_;
};

void emit_config(Report& r, const RunConfig& cfg, const std::vector<std::string>& flag_overrides) {
  std::vector<std::vector<Cell>> rows;
  rows.push_back({"precision", std::to_string(cfg.precision)});
  rows.push_back({"seed_log10_c1", num(cfg.seed_log10_c1)});
  for (const auto& o : cfg.overrides) rows.push_back({"override", o});
  for (const auto& o : flag_overrides) rows.push_back({"flag", o});
  r.section("config", {"key", "value"}, rows);
}

// alpha ---------------------------------------------------------------------

void cmd_alpha(Report& r, const RunConfig& cfg, const std::string& which) {
  std::vector<std::vector<Cell>> rows;
  for (const auto& row : cfg.rows) {
    if (which != "all" && which != row.tag) continue;
    const AlphaSolution s = max_alpha(row);
    const AlphaCheck ok = check_alpha(row, row.stated_alpha);
    rows.push_back({row.tag, Cell(s.lambda), Cell(s.root_bound), Cell(s.alpha_max, 7), to_string(s.binding),
                    Cell(row.stated_alpha, 6), ok.both() ? "yes" : "no",
                    Cell(m_lower_coeff(row, row.stated_alpha).coefficient, 8),
                    Cell(m_lower_coeff(row, s.alpha_max).coefficient, 8)});
  }
  if (rows.empty()) throw DomainError("no parameter row tagged '" + which + "'");
  r.section("alpha", {"row", "lambda", "root", "alpha_max", "binding", "alpha_stated", "stated_admissible",
                      "coeff_stated", "coeff_max"},
            rows);
  r.section("alpha_limits", {"family", "limit"},
            {{"A,B,C", Cell(analytic_alpha_limit(CaseFamily::A))}, {"D", Cell(analytic_alpha_limit(CaseFamily::D))}});
}

// dbound --------------------------------------------------------------------

struct DboundArgs {
  std::string which = "all";
  std::optional<double> seed;
  std::string alpha = "maximal";
  std::string g6 = "displayed";
  double c0_gap = 0.01;
  std::optional<std::string> large_a;
};

void cmd_dbound(Report& r, const RunConfig& cfg, const DboundArgs& a) {
  DBoundOptions opt;
  opt.c0_gap_log10 = a.c0_gap;
  opt.alpha_source = a.alpha == "stated" ? AlphaSource::Stated : AlphaSource::Maximal;
  opt.g6_variant = a.g6 == "rhoa0" ? G6Variant::RhoA0 : G6Variant::Displayed;
  const double seed = a.seed.value_or(cfg.seed_log10_c1);

  if (a.large_a) {
    const Nat A0 = evaluate_expression(*a.large_a).floor_lower();
    const SmallestElementBound s = case_a_max_a(A0, seed, opt);
    std::vector<std::vector<Cell>> trace;
    for (std::size_t i = 0; i < s.d_bound.iterations.size(); ++i) {
      const auto& st = s.d_bound.iterations[i];
      trace.push_back({s.row.tag, std::to_string(i + 1), num(st.log10_c1_in), num(st.log10_c1_out)});
    }
    r.section("trace", {"case", "step", "log10_c1_in", "log10_c1_out"}, trace);
    r.section("large_a", {"A0", "log10_d_bound", "a_bound", "contradiction"},
              {{A0.get_str(), Cell(s.d_bound.log10_d_bound), Cell(s.a_bound, 8), s.contradiction ? "yes" : "no"}});
    return;
  }

  std::vector<std::vector<Cell>> trace, bounds;
  for (const CaseFamily f : {CaseFamily::A, CaseFamily::B, CaseFamily::C, CaseFamily::D}) {
    if (a.which != "all" && a.which != to_string(f)) continue;
    std::vector<CaseParams> rows;
    for (const auto& row : cfg.rows)
      if (row.family == f) rows.push_back(row);
    const DBoundResult res = iterate_d_bound(rows, to_string(f), seed, opt);
    for (std::size_t i = 0; i < res.iterations.size(); ++i) {
      const auto& st = res.iterations[i];
      trace.push_back({to_string(f), std::to_string(i + 1), num(st.log10_c1_in), num(st.log10_c1_out), st.binding_row});
    }
    bounds.push_back({to_string(f), Cell(res.log10_d_bound), res.converged ? "yes" : "no",
                      std::to_string(res.iterations.size()), res.iterations.back().binding_row});
  }
  if (bounds.empty()) throw DomainError("unknown case '" + a.which + "' (expected A, B, C, D or all)");
  r.section("trace", {"case", "step", "log10_c1_in", "log10_c1_out", "binding"}, trace);
  r.section("dbound", {"case", "log10_d_bound", "converged", "iterations", "binding"}, bounds);
}

// sums ----------------------------------------------------------------------

struct SumsArgs {
  std::optional<std::string> x;
  bool exact = false;
  bool bounds = false;
  bool both = false;
  bool grid = false;
  bool constants = false;
};

int cmd_sums(Report& r, const SumsArgs& a) {
  int status = kExitOk;
  if (a.x) {
    const bool want_exact = a.exact || a.both || !a.bounds;
    const bool want_bounds = a.bounds || a.both;
    const Interval x = evaluate_expression(*a.x);
    if (want_exact) {
      const auto n = x.floor_exact();
      if (!n || !fits_u64(*n)) throw DomainError("sums --exact needs an integer x");
      const ExactSums s = exact_sums(to_u64(*n));
      r.section("exact", {"x", "E", "F", "G"}, {{n->get_str(), s.E.get_str(), Cell(s.F), Cell(s.G)}});
    }
    if (want_bounds) {
      const EFBounds b = EF_bounds(x);
      r.section("bounds", {"x", "E_bound", "F_bound", "G_bound"},
                {{*a.x, Cell(b.E_bound), Cell(b.F_bound), Cell(G_bound(x))}});
    }
  }
  if (a.grid) {
    std::vector<std::vector<Cell>> rows;
    bool all = true;
    for (std::uint64_t x = 10; x <= 10'000'000; x *= 10) {
      const ExactSums s = exact_sums(x);
      const EFBounds b = EF_bounds(Interval(nat_from_u64(x)));
      const Interval g = G_bound(Interval(nat_from_u64(x)));
      const bool ok = certainly_less_equal(Interval(s.E), b.E_bound) && certainly_less_equal(s.F, b.F_bound) &&
                      certainly_less_equal(s.G, g);
      all = all && ok;
      rows.push_back({std::to_string(x), s.E.get_str(), Cell(b.E_bound, 8), Cell(s.F, 8), Cell(b.F_bound, 8),
                      Cell(s.G, 8), Cell(g, 8), ok ? "pass" : "fail"});
    }
    r.section("grid_EFG", {"x", "E", "E_bound", "F", "F_bound", "G", "G_bound", "status"}, rows);
    rows.clear();
    for (const std::uint64_t N : {10ull, 100ull, 1000ull, 10000ull, 100000ull}) {
      for (const std::uint64_t H : {1ull, 8ull, 100ull, 100000ull}) {
        const Nat e = dH_sum_exact(N, H);
        const Interval milk = milk_bound(Interval(nat_from_u64(N)), Interval(nat_from_u64(H)));
        const Interval closed = dH_sum_bound(Interval(nat_from_u64(N)), Interval(nat_from_u64(H)));
        const bool ok = certainly_less_equal(Interval(e), min(milk, closed));
        all = all && ok;
        rows.push_back({std::to_string(N), std::to_string(H), e.get_str(), Cell(milk, 8), Cell(closed, 8),
                        ok ? "pass" : "fail"});
      }
    }
    r.section("grid_dH", {"N", "H", "exact", "milk_bound", "dH_bound", "status"}, rows);
    if (!all) status = kExitCertification;
  }
  if (a.constants) {
    const AsymptoticConstants c = asymptotic_constants();
    r.section("asymptotic", {"name", "value"},
              {{"E_leading", Cell(c.E_leading)},
               {"E_second", Cell(c.E_second)},
               {"F_leading", Cell(c.F_leading)},
               {"F_second", Cell(c.F_second)},
               {"G_leading", Cell(c.G_leading)},
               {"G_second", Cell(c.G_second)}});
  }
  if (!a.x && !a.grid && !a.constants) throw DomainError("sums needs --x, --grid or --constants");
  return status;
}

// counts --------------------------------------------------------------------

struct CountsArgs {
  std::string which = "all";
  bool no_prime_swap = false;
  std::optional<std::string> eta;
  std::optional<std::string> m;
};

void report_terms(std::vector<std::vector<Cell>>& rows, const CountReport& rep) {
  for (const auto& t : rep.detail) rows.push_back({rep.case_tag, t.label, t.factors, Cell(t.value, 6)});
}

void cmd_counts(Report& r, const RunConfig& cfg, const CountsArgs& a) {
  CaseAOptions aopt;
  aopt.multipliers = cfg.multipliers;
  aopt.m_values = cfg.m_values;
  aopt.prime_swap = !a.no_prime_swap;
  if (a.m) {
    aopt.m_values.clear();
    std::stringstream ss(*a.m);
    std::string item;
    while (std::getline(ss, item, ',')) aopt.m_values.push_back(evaluate_expression(item));
  }
  std::optional<Interval> eta = cfg.eta;
  if (a.eta) eta = evaluate_expression(*a.eta);
  auto want = [&](const char* c) { return a.which == "all" || a.which == c; };
  if (!want("A") && !want("B") && !want("C") && !want("D"))
    throw DomainError("unknown case '" + a.which + "' (expected A, B, C, D or all)");

  std::vector<std::vector<Cell>> summary, terms;
  if (want("A")) {
    const CaseACount c = count_case_A(aopt);
    summary.push_back({"A", "R_A", Cell(c.radius, 6), std::to_string(c.refined.omega_cap), Cell(c.refined.subtotal, 6)});
    summary.push_back({"A", "doubles", Cell(c.doubles, 6), "", ""});
    summary.push_back({"A", "unrefined", Cell(c.unrefined, 6), std::to_string(c.omega_cap), ""});
    summary.push_back({"A", "unrefined_swapped", Cell(c.unrefined_swapped, 6), std::to_string(c.omega_cap - 1), ""});
    report_terms(terms, c.refined);
    const auto th = m_split_thresholds(aopt.split_d, {14, 15, 16, 17, 18, 19, 20, 21});
    std::vector<std::vector<Cell>> rows;
    for (const auto& t : th)
      rows.push_back({std::to_string(t.omega), Cell(t.supremum, 8), t.exact_floor.get_str(), Cell(t.two_sig, 2)});
    r.section("thresholds", {"omega", "supremum", "floor", "two_sig"}, rows);
  }
  if (want("B")) {
    const CaseBCount c = count_case_B(published_d(CaseFamily::B), cfg.multipliers);
    summary.push_back({"B", "R_B", Cell(c.radius, 6), "", Cell(c.report.subtotal, 6)});
    report_terms(terms, c.report);
  }
  if (want("C")) {
    const CaseCCount c = eta ? count_case_C(*eta, published_d(CaseFamily::C), cfg.multipliers)
                             : optimize_eta(published_d(CaseFamily::C), cfg.multipliers);
    summary.push_back({"C", "eta", Cell(c.eta, 6), std::to_string(c.omega_cap), Cell(c.report.subtotal, 6)});
    summary.push_back({"C", "N3a", Cell(c.N3a, 6), "", ""});
    summary.push_back({"C", "N3b", Cell(c.N3b, 6), "", ""});
    summary.push_back({"C", "b_max", Cell(c.b_max, 6), "", ""});
    report_terms(terms, c.report);
  }
  if (want("D")) {
    const CaseDCount c = count_case_D(published_d(CaseFamily::D), cfg.multipliers);
    summary.push_back({"D", "R_D", Cell(c.radius, 6), "", Cell(c.report.subtotal, 6)});
    report_terms(terms, c.report);
  }
  r.section("counts", {"case", "quantity", "value", "omega_cap", "subtotal"}, summary);
  r.section("terms", {"case", "term", "factors", "value"}, terms);
  std::vector<std::vector<Cell>> mult;
  for (const Multiplier* m : cfg.multipliers.all()) mult.push_back({m->name, std::to_string(m->value), m->provenance});
  r.section("multipliers", {"name", "value", "provenance"}, mult);
  if (a.which == "all") {
    TotalOptions topt;
    topt.a = aopt;
    topt.eta = eta;
    const TotalCount t = total_count(topt);
    r.section("total", {"A", "B", "C", "D", "total"},
              {{Cell(t.a.subtotal, 6), Cell(t.b.subtotal, 6), Cell(t.c.subtotal, 6), Cell(t.d.subtotal, 6),
                Cell(t.total, 6)}});
  }
}

// prime-swap ----------------------------------------------------------------

void cmd_prime_swap(Report& r, const std::string& which, std::optional<std::string> ud_log10, bool census,
                    int& status) {
  const Interval UD = ud_log10 ? exp10(evaluate_expression(*ud_log10)) : published_d(CaseFamily::A);
  std::vector<Nat> as;
  if (which == "all") {
    const Nat a_max = swap_max_a(UD);
    for (Nat a = 1; a <= a_max && a <= 7; ++a) as.push_back(a);
  } else {
    as.push_back(Nat(which));
  }
  const auto forced = forced_small_primes(swap_b0(), swap_window_hi());
  std::string f;
  for (const auto p : forced) f += (f.empty() ? "" : ",") + std::to_string(p);
  r.section("window", {"b0", "window_hi", "forced_primes", "max_a"},
            {{swap_b0().get_str(), Cell(swap_window_hi(), 6), f, swap_max_a(UD).get_str()}});

  std::vector<std::vector<Cell>> rows, ranges, lines;
  for (const Nat& a : as) {
    const unsigned v = max_v(a, UD);
    const auto cands = enumerate_candidates(a, UD);
    const DischargeReport rep = discharge_candidates(a, cands);
    bool q_one = true;
    for (const auto& c : cands) q_one = q_one && c.q == 1;
    rows.push_back({a.get_str(), Cell(ub_of(a, UD) / Interval(b1_of(a)), 6), std::to_string(v),
                    std::to_string(cands.size()), std::to_string(rep.survivors.size()), q_one ? "yes" : "no"});
    for (unsigned u = 1; u <= v; ++u) {
      const SwapRange sr = swap_range(a, UD, u);
      ranges.push_back({a.get_str(), std::to_string(u), std::to_string(sr.K), std::to_string(sr.J)});
    }
    if (!rep.clear()) status = kExitCertification;
    for (const auto& c : rep.survivors) lines.push_back({"survivor", c.str()});
    if (census)
      for (const auto& c : cands) lines.push_back({"candidate", c.str()});
  }
  r.section("prime_swap", {"a", "ub_over_b1", "v", "candidates", "survivors", "q_one"}, rows);
  r.section("ranges", {"a", "u", "K", "J"}, ranges);
  if (!lines.empty()) r.section("census", {"kind", "candidate"}, lines);
}

// oracle --------------------------------------------------------------------

void cmd_oracle_search(Report& r, std::uint64_t limit, unsigned size) {
  std::vector<std::vector<Cell>> rows;
  for (const Tuple& t : search_tuples(limit, size)) rows.push_back({t.str()});
  r.section("tuples", {"tuple"}, rows);
  r.text(std::to_string(rows.size()) + " tuples");
}

void cmd_oracle_triple(Report& r, const std::vector<std::string>& abc) {
  const Nat a(abc.at(0)), b(abc.at(1)), c(abc.at(2));
  const TripleType type = classify_triple(a, b, c);
  const Nat d = regular_fourth(a, b, c);
  r.section("triple", {"a", "b", "c", "type", "regular_fourth"},
            {{a.get_str(), b.get_str(), c.get_str(), to_string(type), d.get_str()}});
}

void cmd_oracle_nonext(Report& r, const std::string& b, const std::string& a_max) {
  std::vector<std::vector<Cell>> rows;
  for (const Nat& a : check_pair_nonextension(Nat(b), Nat(a_max))) rows.push_back({a.get_str()});
  r.section("pair_partners", {"a"}, rows);
  r.text(std::to_string(rows.size()) + " partners a <= " + a_max + " of b = " + b);
}

// certify-all ---------------------------------------------------------------

int cmd_certify_all(Report& r, const RunConfig& cfg, std::ostream& err) {
  const auto checks = certify_all(cfg);
  std::vector<std::vector<Cell>> rows;
  const ConstantCheck* first_fail = nullptr;
  const ConstantCheck* total = nullptr;
  for (const auto& c : checks) {
    rows.push_back({c.stage, c.name, Cell(c.value, 8), c.target, c.tolerance, to_string(c.status), c.reference, c.note});
    if (c.status == CheckStatus::Fail && !first_fail) first_fail = &c;
    if (c.name == "counts.total") total = &c;
  }
  r.section("certify", {"stage", "name", "value", "target", "tolerance", "status", "reference", "note"}, rows);
  if (first_fail) {
    err << "certification failed: " << first_fail->name << " = " << first_fail->value.str(6) << ", target "
        << first_fail->target << " (" << first_fail->reference << ")\n";
    r.text("FAILED: " + first_fail->name);
  }
  if (total && total->status == CheckStatus::Pass) r.text("total ≤ 1.18e27");
  return first_fail ? kExitCertification : kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Certified bounds for Diophantine quintuples"};
  app.require_subcommand(1);
  std::string format = "table";
  int precision = 0;
  std::string config_path;
  app.add_option("--format", format, "table or records")->check(CLI::IsMember({"table", "records"}));
  app.add_option("--precision", precision, "interval precision in bits (>= 64)");
  app.add_option("--config", config_path, "INI file with [run], [multipliers] and [case.<tag>] sections");

  std::string alpha_row = "all";
  auto* alpha = app.add_subcommand("alpha", "admissible alpha per parameter row");
  alpha->add_option("--row", alpha_row, "row tag or all");

  DboundArgs db;
  auto* dbound = app.add_subcommand("dbound", "iterated upper bound on d");
  dbound->add_option("--case", db.which, "A, B, C, D or all");
  dbound->add_option("--seed", db.seed, "log10 of the starting C1");
  dbound->add_option("--alpha", db.alpha, "maximal or stated")->check(CLI::IsMember({"maximal", "stated"}));
  dbound->add_option("--g6", db.g6, "displayed or rhoa0")->check(CLI::IsMember({"displayed", "rhoa0"}));
  dbound->add_option("--c0-gap", db.c0_gap, "log10 C1 - log10 C0");
  dbound->add_option("--large-a", db.large_a, "trial A0 for the large-a row");

  SumsArgs sa;
  auto* sums = app.add_subcommand("sums", "divisor sums and their bounds");
  sums->add_option("--x", sa.x, "argument");
  auto* f_exact = sums->add_flag("--exact", sa.exact, "exact sums");
  auto* f_bounds = sums->add_flag("--bounds", sa.bounds, "closed-form bounds");
  sums->add_flag("--both", sa.both, "exact sums and bounds")->excludes(f_exact)->excludes(f_bounds);
  sums->add_flag("--grid", sa.grid, "domination suite");
  sums->add_flag("--constants", sa.constants, "asymptotic constants");

  CountsArgs ca;
  auto* counts = app.add_subcommand("counts", "per-case quintuple counts");
  counts->add_option("--case", ca.which, "A, B, C, D or all");
  counts->add_flag("--no-prime-swap", ca.no_prime_swap, "keep omega(b) = 23 in case A");
  counts->add_option("--eta", ca.eta, "fixed eta for case C");
  counts->add_option("--m", ca.m, "comma-separated m_1..m_k for case A");

  std::string swap_a = "all";
  std::optional<std::string> swap_ud;
  bool swap_census = false;
  auto* swap = app.add_subcommand("prime-swap", "omega(b) = 23 enumeration");
  swap->add_option("--a", swap_a, "1..7 or all");
  swap->add_option("--ud", swap_ud, "log10 of the bound on d");
  swap->add_flag("--census", swap_census, "list every candidate");

  auto* oracle = app.add_subcommand("oracle", "desk-scale tuple checks");
  oracle->require_subcommand(1);
  std::uint64_t limit = 0;
  unsigned size = 2;
  auto* search = oracle->add_subcommand("search", "all tuples with largest element <= limit");
  search->add_option("--limit", limit)->required();
  search->add_option("--size", size)->check(CLI::Range(2, 4));
  std::vector<std::string> abc;
  auto* triple = oracle->add_subcommand("triple", "classify a triple and its regular extension");
  triple->add_option("abc", abc, "a b c")->expected(3)->required();
  std::string ne_b, ne_amax;
  auto* nonext = oracle->add_subcommand("pair", "all a <= a_max with ab+1 square");
  nonext->add_option("--b", ne_b)->required();
  nonext->add_option("--a-max", ne_amax)->required();

  auto* certify = app.add_subcommand("certify-all", "full pipeline against the published constants");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (precision != 0 && precision < 64) throw DomainError("--precision must be >= 64");
    auto load = [&] { return config_path.empty() ? RunConfig{} : load_config_file(config_path); };
    // The config file may set the precision; literals are re-read at the final one.
    const int bits = precision != 0 ? precision : load().precision;
    PrecisionScope scope(bits);
    RunConfig cfg = load();
    std::vector<std::string> flags;
    if (!config_path.empty()) flags.push_back("--config=" + config_path);
    if (precision != 0 && precision != cfg.precision) flags.push_back("--precision=" + std::to_string(precision));
    cfg.precision = bits;

    Report r(format == "records" ? Format::Records : Format::Table, out);
    emit_config(r, cfg, flags);

    int status = kExitOk;
    if (*alpha) {
      cmd_alpha(r, cfg, alpha_row);
    } else if (*dbound) {
      cmd_dbound(r, cfg, db);
    } else if (*sums) {
      status = cmd_sums(r, sa);
    } else if (*counts) {
      cmd_counts(r, cfg, ca);
    } else if (*swap) {
      cmd_prime_swap(r, swap_a, swap_ud, swap_census, status);
    } else if (*oracle) {
      if (*search) cmd_oracle_search(r, limit, size);
      if (*triple) cmd_oracle_triple(r, abc);
      if (*nonext) cmd_oracle_nonext(r, ne_b, ne_amax);
    } else if (*certify) {
      status = cmd_certify_all(r, cfg, err);
    }
    return status;
  } catch (const CertificationError& e) {
    err << "certification error: " << e.what() << '\n';
    return kExitCertification;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const GuardError& e) {
    err << "refused: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: malformed number (" << e.what() << ")\n";
    return kExitUsage;
  }
}

}  // namespace dq
