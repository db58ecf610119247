#include "dq/alpha.hpp"

#include <array>

#include "dq/errors.hpp"
#include "dq/expr.hpp"

namespace dq {
namespace {

struct RowSpec {
  const char* tag;
  CaseFamily family;
  const char* A0;
  const char* B0;
  const char* C0;
  const char* rho;
  const char* beta;
  const char* tau;
  const char* alpha;
};

// A0, B0 exact; C0/rho/beta as closed forms; tau as an exact fraction.
constexpr std::array<RowSpec, 7> kRows{{
    {"AI", CaseFamily::A, "1", "4095", "3.35e8", "146", "20^(1/2)", "1/2", "1.56155"},
    {"AII", CaseFamily::A, "144", "4002", "5.32e12", "24", "24*577^(1/2)", "1/2", "1.56155"},
    {"BI", CaseFamily::B, "10834", "130001", "5.68e12", "4", "(2+3^(-1/2))^(6/7)", "3/7", "0.9999"},
    {"BII", CaseFamily::B, "16", "4002", "1.01e9", "12", "2^(6/7)", "3/7", "0.9999"},
    {"CI", CaseFamily::C, "1", "4004", "4.05e9", "28", "4^(2/5)", "2/5", "1.5615"},
    {"CII", CaseFamily::C, "144", "4002", "5.83e11", "24", "576^(2/5)", "2/5", "1.5615"},
    {"D", CaseFamily::D, "32501", "292504", "4.04e15", "(1+3^(1/2))^2", "(1+3^(-1/2))^(-4/3)", "1/3", "1.3660"},
}};

Interval positive_root(const Interval& a, const Interval& b, const Interval& c) {
  // Root of a x^2 + b x - c with a, c > 0, written as 2c / (b + sqrt(b^2 + 4ac)).
  return Interval(2L) * c / (b + sqrt(b * b + Interval(4L) * a * c));
}

Interval congruence_lhs(const CaseParams& p, const Interval& alpha) {
  const Interval linear = Interval(1L) + Interval(1L) / (Interval(2L) * Interval(p.B0) * p.C0);
  return alpha * alpha + linear * alpha;
}

Interval growth_linear(const CaseParams& p, const Interval& lambda) {
  const Interval B0(p.B0);
  return Interval(4L) * B0 * (lambda + Interval(1L) / sqrt(p.rho)) +
         Interval(2L) * (lambda + sqrt(p.rho)) / p.C0;
}

Interval growth_lhs(const CaseParams& p, const Interval& alpha) {
  const Interval lambda = compute_lambda(p.A0, p.rho);
  return Interval(3L) * alpha * alpha + growth_linear(p, lambda) * alpha;
}

}  // namespace

std::string to_string(CaseFamily f) {
  switch (f) {
    case CaseFamily::A: return "A";
    case CaseFamily::B: return "B";
    case CaseFamily::C: return "C";
    case CaseFamily::D: return "D";
  }
  return "?";
}

CaseFamily parse_case_family(const std::string& s) {
  if (s == "A") return CaseFamily::A;
  if (s == "B") return CaseFamily::B;
  if (s == "C") return CaseFamily::C;
  if (s == "D") return CaseFamily::D;
  throw DomainError("unknown case family '" + s + "' (expected A, B, C or D)");
}

std::string to_string(AlphaConstraint c) { return c == AlphaConstraint::Congruence ? "congruence" : "growth"; }

std::vector<CaseParams> parameter_table() {
  std::vector<CaseParams> rows;
  rows.reserve(kRows.size());
  for (const RowSpec& r : kRows) {
    CaseParams p;
    p.tag = r.tag;
    p.family = r.family;
    p.A0 = Nat(r.A0);
    p.B0 = Nat(r.B0);
    p.C0 = evaluate_expression(r.C0);
    p.rho = evaluate_expression(r.rho);
    p.beta = evaluate_expression(r.beta);
    p.tau = Rational(r.tau);
    p.tau.canonicalize();
    p.stated_alpha = Interval::from_decimal(r.alpha);
    rows.push_back(std::move(p));
  }
  return rows;
}

const CaseParams& find_row(const std::vector<CaseParams>& rows, const std::string& tag) {
  for (const auto& r : rows)
    if (r.tag == tag) return r;
  throw DomainError("no parameter row tagged '" + tag + "'");
}

void validate(const CaseParams& p) {
  if (p.A0 < 1) throw DomainError(p.tag + ": A0 must be >= 1");
  if (p.B0 < 1) throw DomainError(p.tag + ": B0 must be >= 1");
  if (!(p.tau > 0 && p.tau < 1)) throw DomainError(p.tag + ": tau must lie in (0, 1)");
  if (!certainly_greater(p.rho, Interval(1L))) throw DomainError(p.tag + ": rho must exceed 1");
  if (!certainly_positive(p.C0)) throw DomainError(p.tag + ": C0 must be positive");
  if (!certainly_positive(p.beta)) throw DomainError(p.tag + ": beta must be positive");
  if (!certainly_greater(p.beta * p.rho, Interval(4L))) throw DomainError(p.tag + ": beta*rho > 4 is not certified");
}

Interval compute_lambda(const Nat& A0, const Interval& rho) {
  if (A0 < 1) throw DomainError("compute_lambda: A0 must be >= 1");
  if (!certainly_greater(rho, Interval(1L))) throw DomainError("compute_lambda: rho must exceed 1");
  const Interval a(A0);
  return sqrt((a + Interval(1L)) / (rho * a + Interval(1L)));
}

AlphaCheck check_alpha(const CaseParams& p, const Interval& alpha) {
  AlphaCheck c;
  c.congruence = certainly_less_equal(congruence_lhs(p, alpha), Interval(4L));
  c.growth = certainly_less_equal(growth_lhs(p, alpha), Interval(4L) * Interval(p.B0));
  return c;
}

AlphaCheck check_alpha_violated(const CaseParams& p, const Interval& alpha) {
  AlphaCheck c;
  c.congruence = certainly_greater(congruence_lhs(p, alpha), Interval(4L));
  c.growth = certainly_greater(growth_lhs(p, alpha), Interval(4L) * Interval(p.B0));
  return c;
}

AlphaSolution max_alpha(const CaseParams& p) {
  validate(p);
  AlphaSolution s;
  s.lambda = compute_lambda(p.A0, p.rho);
  const Interval congruence_linear = Interval(1L) + Interval(1L) / (Interval(2L) * Interval(p.B0) * p.C0);
  const Interval r1 = positive_root(Interval(1L), congruence_linear, Interval(4L));
  const Interval r2 = positive_root(Interval(3L), growth_linear(p, s.lambda), Interval(4L) * Interval(p.B0));
  if (!certainly_positive(r1) || !certainly_positive(r2)) throw DomainError(p.tag + ": no positive admissible alpha");
  s.binding = r1.mid() <= r2.mid() ? AlphaConstraint::Congruence : AlphaConstraint::Growth;
  s.root_bound = min(r1, r2);
  // Truncate the certified lower endpoint to 10^-6.
  const double root_lower = s.root_bound.lower();
  const Interval scaled = Interval::from_bounds(root_lower, root_lower) * Interval(1'000'000L);
  Rational lower(scaled.floor_lower(), 1'000'000);
  lower.canonicalize();
  s.alpha_max = Interval(lower);
  if (!certainly_positive(s.alpha_max)) throw DomainError(p.tag + ": no positive admissible alpha at 10^-6 resolution");
  if (!check_alpha(p, s.alpha_max).both())
    throw CertificationError(p.tag + ": truncated alpha_max failed the admissibility re-check");
  return s;
}

Interval analytic_alpha_limit(CaseFamily family) {
  if (family == CaseFamily::D) return (Interval(1L) + sqrt(Interval(3L))) / Interval(2L);
  return (sqrt(Interval(17L)) - Interval(1L)) / Interval(2L);
}

MLowerBound m_lower_coeff(const CaseParams& p, const Interval& alpha) {
  MLowerBound m;
  m.coefficient = alpha * sqrt(p.beta);
  m.exponent = (Rational(1) - p.tau) / 2;
  m.exponent.canonicalize();
  return m;
}

Interval truncate_decimals(const Interval& x, int decimals) {
  Nat scale = 1;
  for (int i = 0; i < decimals; ++i) scale *= 10;
  const Interval scaled = x * Interval(scale);
  const auto whole = scaled.floor_exact();
  if (!whole) throw CertificationError("truncation to " + std::to_string(decimals) + " decimals is undecided for " + x.str());
  Rational q(*whole, scale);
  q.canonicalize();
  return Interval(q);
}

}  // namespace dq
