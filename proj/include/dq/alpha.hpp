#pragma once

#include <string>
#include <vector>

#include "dq/interval.hpp"
#include "dq/nat.hpp"

namespace dq {

enum class CaseFamily { A, B, C, D };

std::string to_string(CaseFamily f);
CaseFamily parse_case_family(const std::string& s);

// One parameter row for the m lower bound: A >= A0, B >= B0, C >= C0,
// B > rho A, C^tau >= beta B.
struct CaseParams {
  std::string tag;  // "AI", "AII", ..., "D"
  CaseFamily family = CaseFamily::A;
  Nat A0;
  Nat B0;
  Interval C0;
  Interval rho;
  Interval beta;
  Rational tau;
  // The admissible alpha quoted alongside the row (1.56155, 0.9999, ...).
  Interval stated_alpha;
};

// The seven published parameter rows, in table order.
std::vector<CaseParams> parameter_table();
const CaseParams& find_row(const std::vector<CaseParams>& rows, const std::string& tag);

// Validates the row invariants (A0 >= 1, 0 < tau < 1, rho > 1, beta*rho > 4
// certified). Throws DomainError naming the failed condition.
void validate(const CaseParams& p);

// lambda = (A0 + 1)^(1/2) (rho A0 + 1)^(-1/2).
Interval compute_lambda(const Nat& A0, const Interval& rho);

// Congruence: alpha^2 + (1 + 1/(2 B0 C0)) alpha <= 4, which turns the
// congruence between the recurrence indices into an equality.
// Growth: 3 alpha^2 + (4 B0 (lambda + rho^-1/2) + 2 (lambda + rho^1/2)/C0) alpha <= 4 B0,
// which makes the resulting upper estimate for C fall below C.
enum class AlphaConstraint { Congruence, Growth };

std::string to_string(AlphaConstraint c);

struct AlphaCheck {
  bool congruence = false;
  bool growth = false;
  bool both() const { return congruence && growth; }
  bool either() const { return congruence || growth; }
};

// Certified evaluation of both quadratic constraints at alpha: a flag is set
// only if the inequality holds for every point of the enclosure.
AlphaCheck check_alpha(const CaseParams& p, const Interval& alpha);
// A flag is set when the inequality is certainly violated.
AlphaCheck check_alpha_violated(const CaseParams& p, const Interval& alpha);

struct AlphaSolution {
  Interval alpha_max;     // truncated to 10^-6, certified admissible
  Interval root_bound;    // enclosure of the smaller positive root before truncation
  Interval lambda;
  AlphaConstraint binding = AlphaConstraint::Congruence;
};

// Largest admissible alpha, from the closed-form positive roots of the two
// quadratics. Throws DomainError if no positive alpha exists.
AlphaSolution max_alpha(const CaseParams& p);

// Limit of max_alpha as B0, C0 (and for case D also A0) grow without bound:
// (sqrt(17) - 1)/2 for the families A, B, C and (1 + sqrt(3))/2 for D.
Interval analytic_alpha_limit(CaseFamily family);

struct MLowerBound {
  Interval coefficient;  // alpha beta^(1/2)
  Rational exponent;     // (1 - tau)/2; m > coefficient * d^exponent
};

MLowerBound m_lower_coeff(const CaseParams& p, const Interval& alpha);

// Truncation to a fixed number of decimals (toward zero), certified: throws
// CertificationError if the enclosure straddles a truncation boundary.
Interval truncate_decimals(const Interval& x, int decimals);

}  // namespace dq
