#pragma once

// Upper bounds on the fourth element d of a quintuple from a lower bound for a
// linear form in three logarithms, played against the m lower bound.

#include <string>
#include <vector>

#include "dq/alpha.hpp"
#include "dq/interval.hpp"

namespace dq {

// 5.3 n^(-n+1/2) (n+1)^(n+1) (n+8)^2 (n+5) 31.44^n d^2 log(3nd).
Interval aleksentsev_constant(long n, long d);

// Rounded linear-form constant at (n, d) = (3, 4), and the j-inequality
// constant after absorbing the upper bound for the linear form.
Interval rounded_linear_form_constant();  // 1.5013e11
Interval j_bound_constant();              // 1.50131e11

enum class Threshold { C0, C1 };
std::string to_string(Threshold t);

// The g6 display subtracts log(1 - 4/C1); the line deriving it carries
// (1 - rho A0/C1) instead. Both are available for comparison.
enum class G6Variant { Displayed, RhoA0 };

struct SideConditions {
  bool beta_rho_gt_4 = false;
  bool conjugate_gt_1 = false;  // rho B0^(1-tau) (rho^(1/2) - 1)^(2 tau) > 2^(2 tau)
  bool g2_lt_g4 = false;
  bool g2_gt_g6 = false;
  bool all() const { return beta_rho_gt_4 && conjugate_gt_1 && g2_lt_g4 && g2_gt_g6; }
};

struct GVector {
  Interval g1, g2, g3, g4, g5, g6;
  Threshold e_choice = Threshold::C1;  // base of the logarithm in g3
  Threshold f_choice = Threshold::C1;  // base of the logarithm in g5
  SideConditions side;
};

// Evaluates g1..g6 for C0 <= C <= C1 and certifies the side conditions.
// e = C0 when beta < 4, otherwise C1; f = C1 when beta > 1, otherwise C0.
// Throws CertificationError naming the first side condition that fails.
GVector g_values(const CaseParams& p, const Interval& C0, const Interval& C1,
                 G6Variant variant = G6Variant::Displayed);

// [lo, hi] around the largest j with
//   j < 1.50131e11 g3 g5 log^2(C1) log(2j / (g6 log C0)),
// hi certified to violate the inequality, hi/lo <= 1 + 1e-7.
struct JBound {
  Interval j;       // [lo, hi]
  Interval excess;  // right-hand side minus j, evaluated at hi (certified < 0)
};

JBound solve_j_bound(const GVector& g, const Interval& C0, const Interval& C1);
JBound solve_j_bound(const CaseParams& p, const Interval& C0, const Interval& C1);

// (1.50131e11 - 1.5013e11) g3 g5 log^2(C0) log 3: the slack available to
// absorb log(8AC/3)/(2 log alpha_1) < 1 when passing from the rounded
// constant to the j inequality. Must be certified >= 1.
Interval absorption_margin(const GVector& g, const Interval& C0);

enum class AlphaSource { Maximal, Stated };

struct DBoundOptions {
  double c0_gap_log10 = 0.01;  // log10 C0 = log10 C1 - gap
  double tolerance_log10 = 1e-3;
  int max_iterations = 200;
  AlphaSource alpha_source = AlphaSource::Maximal;
  G6Variant g6_variant = G6Variant::Displayed;
};

struct DBoundStep {
  double log10_c1_in = 0;
  double log10_c1_out = 0;
  std::string binding_row;
};

struct DBoundResult {
  std::string case_tag;
  Interval log10_d_bound;  // d < 10^upper
  std::vector<DBoundStep> iterations;
  bool converged = false;
};

// Alternates the j inequality (with j = 2m) and the m lower bound over the
// rows of one family, feeding each new bound on d back in as C1.
DBoundResult iterate_d_bound(const std::vector<CaseParams>& rows, const std::string& case_tag, double seed_log10_c1,
                             const DBoundOptions& options = {});
DBoundResult iterate_d_bound(CaseFamily family, double seed_log10_c1 = 72.188, const DBoundOptions& options = {});

// Parameter row for case (A) triples with a >= A0 >= 144: b > 2a^(3/2) gives
// B0 = floor(2 A0^(3/2)) + 1 and rho = 2 A0^(1/2); beta = (16A0^2 + 4A0)^(1/2),
// tau = 1/2, C0 = beta^2 B0^2.
CaseParams large_a_row(const Nat& A0);

struct SmallestElementBound {
  CaseParams row;
  DBoundResult d_bound;
  Interval a_bound;  // d^(1/6)/4 at the d bound
  bool contradiction = false;  // a_bound < A0 certified
};

// With a >= A0 the iterated d bound and d > (16a^2)^3 give a < d^(1/6)/4; when
// that is below A0 no case (A) quintuple has a >= A0.
SmallestElementBound case_a_max_a(const Nat& trial_A0, double seed_log10_c1 = 72.188,
                                  const DBoundOptions& options = {});

}  // namespace dq
