#include "dq/logforms.hpp"

#include <algorithm>
#include <cmath>

#include "dq/errors.hpp"

namespace dq {
namespace {

Interval tau_of(const CaseParams& p) { return Interval(p.tau); }

Interval pick(Threshold t, const Interval& C0, const Interval& C1) { return t == Threshold::C0 ? C0 : C1; }

Interval point(double x) { return Interval::from_bounds(x, x); }

// Right-hand side minus j for the j inequality.
Interval j_excess(const Interval& scale, const Interval& log_base, const Interval& j) {
  return scale * log(Interval(2L) * j / log_base) - j;
}

}  // namespace

Interval aleksentsev_constant(long n, long d) {
  if (n < 1 || d < 1) throw DomainError("aleksentsev_constant: n and d must be >= 1");
  const Interval N(n);
  const Interval half = Interval(Rational(1, 2));
  Interval value = Interval::from_decimal("5.3");
  value *= pow(N, -N + half);
  value *= pow(N + Interval(1L), n + 1);
  value *= pow(N + Interval(8L), 2L);
  value *= N + Interval(5L);
  value *= pow(Interval::from_decimal("31.44"), n);
  value *= pow(Interval(d), 2L);
  value *= log(Interval(3L) * N * Interval(d));
  return value;
}

Interval rounded_linear_form_constant() { return Interval::from_decimal("1.5013e11"); }
Interval j_bound_constant() { return Interval::from_decimal("1.50131e11"); }

std::string to_string(Threshold t) { return t == Threshold::C0 ? "C0" : "C1"; }

GVector g_values(const CaseParams& p, const Interval& C0, const Interval& C1, G6Variant variant) {
  if (!certainly_less(C0, C1)) throw DomainError(p.tag + ": g_values needs C0 < C1");
  const Interval one(1L);
  const Interval four(4L);
  const Interval tau = tau_of(p);
  const Interval L1 = log(C1);
  const Interval A0(p.A0);
  const Interval B0(p.B0);

  GVector g;
  if (certainly_less(p.beta, four)) {
    g.e_choice = Threshold::C0;
  } else if (certainly_greater(p.beta, four)) {
    g.e_choice = Threshold::C1;
  } else {
    throw CertificationError(p.tag + ": cannot decide beta < 4 for the choice of e");
  }
  if (certainly_greater(p.beta, one)) {
    g.f_choice = Threshold::C1;
  } else if (certainly_less(p.beta, one)) {
    g.f_choice = Threshold::C0;
  } else {
    throw CertificationError(p.tag + ": cannot decide beta > 1 for the choice of f");
  }
  const Interval e = pick(g.e_choice, C0, C1);
  const Interval f = pick(g.f_choice, C0, C1);

  g.g1 = one + tau + (log(four) - log(p.beta * p.rho)) / L1;
  g.g2 = one + (log(four) + log(A0)) / L1;
  g.g3 = one + tau + (log(four) + log(one / p.beta + pow(e, -one - tau))) / log(e);
  g.g4 = one + (log(four) + log(B0)) / L1;
  g.g5 = Interval(2L) + Interval(2L) * tau - Interval(2L) * log(p.beta) / log(f);
  const Interval tail = variant == G6Variant::Displayed ? log(one - four / C1) : log(one - p.rho * A0 / C1);
  g.g6 = one - tau +
         (log(p.beta * p.rho * p.rho / four) + Interval(2L) * log(one - A0 / C1) - tail) / L1;

  g.side.beta_rho_gt_4 = certainly_greater(p.beta * p.rho, four);
  g.side.conjugate_gt_1 = certainly_greater(p.rho * pow(B0, one - tau) * pow(sqrt(p.rho) - one, Interval(2L) * tau),
                                            pow(Interval(2L), Interval(2L) * tau));
  g.side.g2_lt_g4 = certainly_less(g.g2, g.g4);
  g.side.g2_gt_g6 = certainly_greater(g.g2, g.g6);

  if (!g.side.beta_rho_gt_4) throw CertificationError(p.tag + ": side condition beta*rho > 4 not certified");
  if (!g.side.conjugate_gt_1)
    throw CertificationError(p.tag + ": side condition rho B0^(1-tau) (rho^(1/2)-1)^(2tau) > 2^(2tau) not certified");
  if (!g.side.g2_lt_g4) throw CertificationError(p.tag + ": side condition g2 < g4 not certified");
  if (!g.side.g2_gt_g6) throw CertificationError(p.tag + ": side condition g2 > g6 not certified");
  for (const Interval* v : {&g.g1, &g.g2, &g.g3, &g.g4, &g.g5, &g.g6})
    if (!certainly_positive(*v)) throw CertificationError(p.tag + ": a g-value is not certified positive");
  return g;
}

JBound solve_j_bound(const GVector& g, const Interval& C0, const Interval& C1) {
  const Interval L1 = log(C1);
  const Interval scale = j_bound_constant() * g.g3 * g.g5 * L1 * L1;
  const Interval log_base = g.g6 * log(C0);

  // The excess is concave in j with its maximum at j = scale, so the largest
  // root lies above scale and the excess is negative beyond it.
  double lo = scale.upper();
  if (!certainly_positive(j_excess(scale, log_base, point(lo))))
    throw CertificationError("solve_j_bound: j inequality has no admissible j at the concavity point");
  double hi = 2 * lo;
  while (!certainly_less(j_excess(scale, log_base, point(hi)), Interval(0L))) {
    lo = hi;
    hi *= 2;
    if (hi > 1e60) throw CertificationError("solve_j_bound: no crossing below 1e60");
  }
  while (hi / lo > 1 + 1e-7) {
    const double mid = std::sqrt(lo) * std::sqrt(hi);
    if (certainly_less(j_excess(scale, log_base, point(mid)), Interval(0L))) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  JBound out;
  out.j = Interval::from_bounds(lo, hi);
  out.excess = j_excess(scale, log_base, point(hi));
  return out;
}

JBound solve_j_bound(const CaseParams& p, const Interval& C0, const Interval& C1) {
  return solve_j_bound(g_values(p, C0, C1), C0, C1);
}

Interval absorption_margin(const GVector& g, const Interval& C0) {
  const Interval L0 = log(C0);
  return (j_bound_constant() - rounded_linear_form_constant()) * g.g3 * g.g5 * L0 * L0 * log(Interval(3L));
}

DBoundResult iterate_d_bound(const std::vector<CaseParams>& rows, const std::string& case_tag, double seed_log10_c1,
                             const DBoundOptions& options) {
  if (rows.empty()) throw DomainError("iterate_d_bound: no parameter rows for case " + case_tag);

  struct RowBound {
    const CaseParams* row;
    MLowerBound m;
  };
  std::vector<RowBound> bounds;
  for (const auto& row : rows) {
    const Interval alpha = options.alpha_source == AlphaSource::Maximal ? max_alpha(row).alpha_max : row.stated_alpha;
    if (!check_alpha(row, alpha).both()) throw CertificationError(row.tag + ": alpha is not admissible");
    bounds.push_back({&row, m_lower_coeff(row, alpha)});
  }

  DBoundResult result;
  result.case_tag = case_tag;
  double current = seed_log10_c1;
  for (int it = 0; it < options.max_iterations; ++it) {
    const Interval C1 = exp10(point(current));
    const Interval C0 = exp10(point(current - options.c0_gap_log10));
    double next = -1;
    std::string binding;
    for (const auto& [row, m] : bounds) {
      if (!certainly_less(row->C0, C0)) throw CertificationError(row->tag + ": iteration C0 fell below the row's C0");
      const GVector g = g_values(*row, C0, C1, options.g6_variant);
      if (!certainly_less_equal(Interval(1L), absorption_margin(g, C0)))
        throw CertificationError(row->tag + ": rounded constant cannot absorb the linear-form upper bound");
      const JBound jb = solve_j_bound(g, C0, C1);
      // 2 coeff C^e < j <= j_hi  =>  log10 C < log10(j_hi / (2 coeff)) / e.
      const Interval j_hi = point(jb.j.upper());
      const Interval bound = log10(j_hi / (Interval(2L) * m.coefficient)) / Interval(m.exponent);
      if (bound.upper() > next) {
        next = bound.upper();
        binding = row->tag;
      }
    }
    result.iterations.push_back({current, next, binding});
    if (it == 0 && !(next < current))
      throw CertificationError("iterate_d_bound: no contraction from the seed 10^" + std::to_string(seed_log10_c1));
    if (next >= current) break;  // no further progress; keep the previous bound
    const bool done = current - next < options.tolerance_log10;
    current = next;
    if (done) {
      result.converged = true;
      break;
    }
  }
  result.log10_d_bound = point(current);
  return result;
}

DBoundResult iterate_d_bound(CaseFamily family, double seed_log10_c1, const DBoundOptions& options) {
  std::vector<CaseParams> rows;
  for (auto& row : parameter_table())
    if (row.family == family) rows.push_back(std::move(row));
  return iterate_d_bound(rows, to_string(family), seed_log10_c1, options);
}

CaseParams large_a_row(const Nat& A0) {
  if (A0 < 144) throw DomainError("large_a_row: A0 must be >= 144");
  const Interval a(A0);
  CaseParams p;
  p.tag = "A(a>=" + A0.get_str() + ")";
  p.family = CaseFamily::A;
  p.A0 = A0;
  const Interval two_a_pow = Interval(2L) * pow(a, Rational(3, 2));
  const auto floor_value = two_a_pow.floor_exact();
  if (!floor_value) throw CertificationError("large_a_row: floor(2 A0^(3/2)) undecided");
  p.B0 = *floor_value + 1;
  p.rho = Interval(2L) * sqrt(a);
  p.beta = sqrt(Interval(16L) * a * a + Interval(4L) * a);
  p.tau = Rational(1, 2);
  p.C0 = p.beta * p.beta * Interval(p.B0) * Interval(p.B0);
  p.stated_alpha = Interval(0L);
  validate(p);
  p.stated_alpha = max_alpha(p).alpha_max;
  return p;
}

SmallestElementBound case_a_max_a(const Nat& trial_A0, double seed_log10_c1, const DBoundOptions& options) {
  SmallestElementBound out;
  out.row = large_a_row(trial_A0);
  out.d_bound = iterate_d_bound({out.row}, out.row.tag, seed_log10_c1, options);
  const Interval d = exp10(point(out.d_bound.log10_d_bound.upper()));
  out.a_bound = pow(d, Rational(1, 6)) / Interval(4L);
  out.contradiction = certainly_less(out.a_bound, Interval(trial_A0));
  return out;
}

}  // namespace dq
