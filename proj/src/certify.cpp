#include "dq/certify.hpp"

#include <cmath>
#include <cstdio>

#include "dq/alpha.hpp"
#include "dq/counting.hpp"
#include "dq/errors.hpp"
#include "dq/logforms.hpp"
#include "dq/prime_swap.hpp"

namespace dq {
namespace {

int significant_figures(const std::string& target) {
  int n = 0;
  for (const char c : target) {
    if (c == 'e' || c == 'E') break;
    if (c >= '0' && c <= '9') ++n;
  }
  return n;
}

double round_up_sig(double v, int sf) {
  const double scale = std::pow(10.0, std::floor(std::log10(v)) - sf + 1);
  return std::ceil(v / scale) * scale;
}

std::string fmt(double v, int digits = 6) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, v);
  return buf;
}

Interval abs_diff(const Interval& x, const char* target) {
  const Interval t = Interval::from_decimal(target);
  return max(x - t, t - x);
}

class Checklist {
 public:
  explicit Checklist(std::vector<ConstantCheck>& out) : out_(out) {}

  void add(std::string stage, std::string name, Interval value, std::string target, std::string reference,
           std::string tolerance, bool pass, std::string note = {}) {
    out_.push_back({std::move(stage), std::move(name), std::move(value), std::move(target), std::move(reference),
                    std::move(tolerance), pass ? CheckStatus::Pass : CheckStatus::Fail, std::move(note)});
  }

  void flag(std::string stage, std::string name, Interval value, std::string reference, std::string note) {
    out_.push_back(
        {std::move(stage), std::move(name), std::move(value), "", std::move(reference), "", CheckStatus::Flag, std::move(note)});
  }

  void published(std::string stage, std::string name, const Interval& value, const std::string& target,
                 std::string reference) {
    add(std::move(stage), std::move(name), value, target, std::move(reference), "1% after rounding up",
        matches_published(value, target));
  }

 private:
  std::vector<ConstantCheck>& out_;
};

void alpha_stage(const RunConfig& cfg, Checklist& list) {
  for (const auto& row : cfg.rows) {
    const AlphaSolution s = max_alpha(row);
    const Interval limit = analytic_alpha_limit(row.family);
    list.add("alpha", "alpha." + row.tag + ".stated", row.stated_alpha, "",
             "quoted admissible alpha", "both quadratics certified", check_alpha(row, row.stated_alpha).both());
    list.add("alpha", "alpha." + row.tag + ".max", s.alpha_max, "", "largest admissible alpha",
             "stated <= max <= limit",
             certainly_less_equal(row.stated_alpha, s.alpha_max) && certainly_less_equal(s.alpha_max, limit),
             "binding " + to_string(s.binding));
  }
  const Interval abc = analytic_alpha_limit(CaseFamily::A);
  const Interval d = analytic_alpha_limit(CaseFamily::D);
  list.add("alpha", "alpha.limit.ABC", abc, "1.5615528", "limit as B0, C0 grow", "1e-6",
           certainly_less(abs_diff(abc, "1.5615528"), Interval::from_decimal("1e-6")));
  list.add("alpha", "alpha.limit.D", d, "1.366025", "limit as A0, B0, C0 grow", "1e-6",
           certainly_less(abs_diff(d, "1.366025"), Interval::from_decimal("1e-6")));

  struct Coeff {
    const char* row;
    const char* target;
  };
  for (const Coeff c : {Coeff{"AI", "3.3022"}, Coeff{"BI", "1.5002"}, Coeff{"CI", "2.0604"}, Coeff{"D", "1.0080"}}) {
    const CaseParams& row = find_row(cfg.rows, c.row);
    const Interval coeff = m_lower_coeff(row, row.stated_alpha).coefficient;
    const auto digits = (coeff * Interval(10'000L)).floor_exact();
    const Nat expected(std::string(c.target).erase(1, 1));
    list.add("alpha", std::string("alpha.coefficient.") + c.row, coeff, c.target, "m lower-bound constant",
             "4 decimals (truncated)", digits && *digits == expected);
  }
  const CaseParams& bi = find_row(cfg.rows, "BI");
  const CaseParams& bii = find_row(cfg.rows, "BII");
  const Interval c_bii = m_lower_coeff(bii, bii.stated_alpha).coefficient;
  if (certainly_less(c_bii, m_lower_coeff(bi, bi.stated_alpha).coefficient))
    list.flag("alpha", "alpha.coefficient.BII", c_bii, "m lower-bound constant",
              "BII gives " + fmt(c_bii.mid(), 5) + " < BI 1.5002 with the quoted alpha; the published B constant omits it");
}

void dbound_stage(const RunConfig& cfg, Checklist& list) {
  const char* targets[] = {"67.859", "60.057", "56.528", "51.416"};
  int i = 0;
  for (const CaseFamily f : {CaseFamily::A, CaseFamily::B, CaseFamily::C, CaseFamily::D}) {
    std::vector<CaseParams> rows;
    for (const auto& r : cfg.rows)
      if (r.family == f) rows.push_back(r);
    const DBoundResult res = iterate_d_bound(rows, to_string(f), cfg.seed_log10_c1);
    const Interval target = Interval::from_decimal(targets[i]);
    const Interval diff = res.log10_d_bound - target;
    list.add("dbound", "dbound." + to_string(f), res.log10_d_bound, targets[i], "published log10 bound on d", "0.1",
             res.converged && certainly_less(diff, Interval::from_decimal("0.1")) &&
                 certainly_less(-Interval::from_decimal("0.1"), diff),
             "binding " + res.iterations.back().binding_row + ", " + std::to_string(res.iterations.size()) +
                 " iterations");
    list.add("dbound", "dbound." + to_string(f) + ".below_published", res.log10_d_bound, targets[i],
             "published bound used by the counts", "computed <= published",
             certainly_less_equal(res.log10_d_bound, target));
    ++i;
  }
  const Interval k = aleksentsev_constant(3, 4);
  list.add("dbound", "dbound.aleksentsev", k, "1.5013e11", "three-logarithm constant", "4 significant figures",
           (k.floor_lower() + 5'000'000) / 10'000'000 == 15013 && (k.ceil_upper() + 5'000'000) / 10'000'000 == 15013);

  const SmallestElementBound s = case_a_max_a(Nat(74'000'000), cfg.seed_log10_c1);
  const Interval target = log10(Interval::from_decimal("6.1e50"));
  const Interval diff = s.d_bound.log10_d_bound - target;
  list.add("dbound", "dbound.large_a.d", s.d_bound.log10_d_bound, "6.1e50", "large-a bound on d", "0.1 in log10",
           certainly_less(diff, Interval::from_decimal("0.1")) && certainly_less(-Interval::from_decimal("0.1"), diff));
  list.add("dbound", "dbound.large_a.a", s.a_bound, "7.29e7", "large-a bound on a", "a_bound <= 7.29e7",
           certainly_less_equal(s.a_bound, Interval::from_decimal("7.29e7")) && s.contradiction);
}

void prime_swap_stage(Checklist& list) {
  const SwapCensus c = run_prime_swap(published_d(CaseFamily::A));
  std::string v;
  for (const unsigned x : c.v) v += (v.empty() ? "" : ",") + std::to_string(x);
  list.add("prime-swap", "prime_swap.v", Interval(static_cast<long>(c.v.size())), "2,3,0,3,0,0,0",
           "maximal swap count for a = 1..7", "exact", v == "2,3,0,3,0,0,0", "v = " + v);
  std::string forced;
  for (const auto p : c.forced) forced += (forced.empty() ? "" : ",") + std::to_string(p);
  list.add("prime-swap", "prime_swap.forced", Interval(static_cast<long>(c.forced.size())), "2,3,5,7,11",
           "primes forced to divide b", "exact", forced == "2,3,5,7,11", "forced = " + forced);
  list.add("prime-swap", "prime_swap.q", Interval(1L), "1", "multiplier after the swap", "exact", c.all_q_one);
  std::size_t survivors = 0;
  for (const auto& r : c.reports) survivors += r.survivors.size();
  list.add("prime-swap", "prime_swap.survivors", Interval(static_cast<long>(survivors)), "0",
           "pairs with ab+1 square", "exact", survivors == 0,
           std::to_string(c.candidates.size()) + " candidates checked");
}

void counts_stage(const RunConfig& cfg, Checklist& list) {
  CaseAOptions aopt;
  aopt.multipliers = cfg.multipliers;
  aopt.m_values = cfg.m_values;
  aopt.prime_swap = true;
  const CaseACount a = count_case_A(aopt);
  list.published("counts", "counts.A.doubles", a.doubles, "4.080e19", "case A doubles");
  list.published("counts", "counts.A.unrefined", a.unrefined, "8.215e27", "case A single-range count");
  const CaseBCount b = count_case_B(published_d(CaseFamily::B), cfg.multipliers);
  list.published("counts", "counts.B", b.report.subtotal, "2.0e23", "case B count");
  const Interval eta = cfg.eta.value_or(Interval::from_decimal("6.76e10"));
  const CaseCCount c = count_case_C(eta, published_d(CaseFamily::C), cfg.multipliers);
  list.published("counts", "counts.C", c.report.subtotal, "2.41e22", "case C count at eta = " + fmt(eta.mid(), 4));
  const CaseDCount d = count_case_D(published_d(CaseFamily::D), cfg.multipliers);
  list.published("counts", "counts.D", d.report.subtotal, "2.07e19", "case D count");

  const auto m = m_split_thresholds(split_d_bound(), {14, 15, 16, 17, 18, 19, 20, 21});
  list.add("counts", "counts.m1", m[0].supremum, "177", "split threshold for w <= 14", "exact floor",
           m[0].exact_floor == 177);
  list.add("counts", "counts.m2", m[1].supremum, "499686", "split threshold for w <= 15", "exact floor",
           m[1].exact_floor == 499686);
  const auto published_m = published_m_values();
  for (std::size_t j = 2; j < m.size(); ++j) {
    list.add("counts", "counts.m" + std::to_string(j + 1), m[j].two_sig, published_m[j].str(2),
             "split threshold for w <= " + std::to_string(m[j].omega), "2 significant figures (floor)",
             certainly_less_equal(m[j].two_sig, published_m[j]) && certainly_less_equal(published_m[j], m[j].two_sig));
  }
  list.add("counts", "counts.A.refined", a.refined.subtotal, "1.177e27", "case A split-range count",
           "<= target, within 1%",
           certainly_less_equal(a.refined.subtotal, Interval::from_decimal("1.177e27")) &&
               matches_published(a.refined.subtotal, "1.177e27"));

  TotalOptions topt;
  topt.a = aopt;
  topt.eta = cfg.eta;
  const TotalCount t = total_count(topt);
  list.add("counts", "counts.total", t.total, "1.18e27", "total number of quintuples", "<= target",
           certainly_less_equal(t.total, Interval::from_decimal("1.18e27")),
           cfg.eta ? "case C at the configured eta" : "case C at the optimal eta");
}

}  // namespace

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Flag: return "flag";
  }
  return "?";
}

bool matches_published(const Interval& value, const std::string& target, double rel) {
  const double t = std::stod(target);
  const int sf = significant_figures(target);
  for (const double v : {value.lower(), value.upper()}) {
    const double raw = std::fabs(v - t) / t;
    const double rounded = std::fabs(round_up_sig(v, sf) - t) / t;
    if (std::min(raw, rounded) > rel) return false;
  }
  return true;
}

std::vector<ConstantCheck> certify_all(const RunConfig& config) {
  std::vector<ConstantCheck> out;
  Checklist list(out);
  alpha_stage(config, list);
  dbound_stage(config, list);
  prime_swap_stage(list);
  counts_stage(config, list);
  return out;
}

}  // namespace dq
