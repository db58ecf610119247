#include <doctest.h>

#include <cmath>

#include "dq/alpha.hpp"
#include "dq/errors.hpp"
#include "dq/expr.hpp"

using namespace dq;

namespace {

const CaseParams& row(const std::string& tag) {
  static const auto table = parameter_table();
  return find_row(table, tag);
}

Interval lit(const char* s) { return Interval::from_decimal(s); }

}  // namespace

TEST_CASE("compute_lambda") {
  CHECK(std::abs(compute_lambda(Nat(1), Interval(146L)).mid() - std::sqrt(2.0 / 147.0)) < 1e-16);
  CHECK(compute_lambda(Nat(1), Interval(146L)).width() < 1e-30);
  // rho -> 1 drives lambda to 1
  CHECK(std::abs(compute_lambda(Nat(1000), lit("1.000001")).mid() - 1.0) < 1e-6);
  const Interval rho_d = evaluate_expression("(1+3^(1/2))^2");
  const double expected = std::sqrt(32502.0 / (rho_d.mid() * 32501.0 + 1.0));
  CHECK(std::abs(compute_lambda(Nat(32501), rho_d).mid() - expected) < 1e-15);
  CHECK_THROWS_AS(compute_lambda(Nat(1), Interval(1L)), DomainError);
  CHECK_THROWS_AS(compute_lambda(Nat(0), Interval(2L)), DomainError);
}

TEST_CASE("table rows are valid") {
  const auto table = parameter_table();
  CHECK(table.size() == 7);
  for (const auto& r : table) {
    CHECK_NOTHROW(validate(r));
    CHECK(certainly_greater(r.beta * r.rho, Interval(4L)));
  }
  CaseParams bad = row("AI");
  bad.rho = Interval(1L);
  CHECK_THROWS_AS(validate(bad), DomainError);
  bad = row("AI");
  bad.tau = 1;
  CHECK_THROWS_AS(validate(bad), DomainError);
}

TEST_CASE("stated alpha is certified admissible") {
  for (const auto& r : parameter_table()) {
    INFO(r.tag);
    CHECK(check_alpha(r, r.stated_alpha).both());
  }
  CHECK(row("AI").stated_alpha.contains(lit("1.56155")));
  CHECK(row("BI").stated_alpha.contains(lit("0.9999")));
  CHECK(row("CI").stated_alpha.contains(lit("1.5615")));
  CHECK(row("D").stated_alpha.contains(lit("1.3660")));
}

TEST_CASE("max_alpha lies between the stated value and the limit") {
  for (const auto& r : parameter_table()) {
    INFO(r.tag);
    const AlphaSolution s = max_alpha(r);
    CHECK(certainly_less_equal(r.stated_alpha, s.alpha_max));
    CHECK(certainly_less_equal(s.alpha_max, analytic_alpha_limit(r.family)));
    CHECK(check_alpha(r, s.alpha_max).both());
    CHECK(check_alpha_violated(r, s.alpha_max + lit("1e-4")).either());
    CHECK(certainly_less_equal(s.alpha_max, s.root_bound));
    CHECK(s.root_bound.lower() - s.alpha_max.upper() < 1e-6 + 1e-12);
  }
}

TEST_CASE("analytic limits") {
  // positive roots of a^2 + a = 4 and 2a^2 - 2a = 1
  const double abc = (std::sqrt(17.0) - 1) / 2;
  const double d = (1 + std::sqrt(3.0)) / 2;
  CHECK(std::abs(analytic_alpha_limit(CaseFamily::A).mid() - abc) < 1e-15);
  CHECK(std::abs(analytic_alpha_limit(CaseFamily::C).mid() - abc) < 1e-15);
  CHECK(std::abs(analytic_alpha_limit(CaseFamily::D).mid() - d) < 1e-15);
  CHECK(std::abs(analytic_alpha_limit(CaseFamily::A).mid() - 1.5615528) < 1e-6);
  CHECK(std::abs(analytic_alpha_limit(CaseFamily::D).mid() - 1.366025) < 1e-6);
}

TEST_CASE("max_alpha approaches the limit as B0 and C0 grow") {
  CaseParams r = row("AI");
  r.B0 = Nat("1000000000000000000000");
  r.C0 = lit("1e40");
  CHECK(std::abs(max_alpha(r).alpha_max.mid() - analytic_alpha_limit(CaseFamily::A).mid()) < 2e-6);
}

TEST_CASE("max_alpha is non-decreasing in B0 and C0") {
  for (const char* tag : {"AI", "BI", "CI", "D"}) {
    INFO(tag);
    CaseParams r = row(tag);
    double prev = 0;
    for (int k = 0; k < 6; ++k) {
      const double a = max_alpha(r).alpha_max.mid();
      CHECK(a >= prev);
      prev = a;
      r.B0 *= 3;
    }
    r = row(tag);
    prev = 0;
    for (int k = 0; k < 6; ++k) {
      const double a = max_alpha(r).alpha_max.mid();
      CHECK(a >= prev);
      prev = a;
      r.C0 *= Interval(10L);
    }
  }
}

TEST_CASE("m lower-bound coefficients") {
  struct Expect {
    const char* tag;
    long digits;  // coefficient truncated to 4 decimals, times 10^4
    Rational exponent;
  };
  for (const Expect& e : {Expect{"AI", 33022, Rational(1, 4)}, Expect{"BI", 15002, Rational(2, 7)},
                         Expect{"CI", 20604, Rational(3, 10)}, Expect{"D", 10080, Rational(1, 3)}}) {
    INFO(e.tag);
    const MLowerBound m = m_lower_coeff(row(e.tag), row(e.tag).stated_alpha);
    CHECK(m.exponent == e.exponent);
    const auto cut = (m.coefficient * Interval(10'000L)).floor_exact();
    REQUIRE(cut);
    CHECK(*cut == e.digits);
  }
  // AI: 1.56155 * (20^(1/2))^(1/2)
  CHECK(std::abs(m_lower_coeff(row("AI"), row("AI").stated_alpha).coefficient.mid() - 1.56155 * std::pow(20.0, 0.25)) < 1e-12);
}

TEST_CASE("BII coefficient is weaker than BI") {
  const Interval bi = m_lower_coeff(row("BI"), row("BI").stated_alpha).coefficient;
  const Interval bii = m_lower_coeff(row("BII"), row("BII").stated_alpha).coefficient;
  CHECK(certainly_less(bii, bi));
  CHECK(std::abs(bii.mid() - 0.9999 * std::pow(2.0, 3.0 / 7.0)) < 1e-12);
  CHECK(std::abs(bii.mid() - 1.3458) < 1e-4);
}

TEST_CASE("truncate_decimals") {
  CHECK(std::abs(truncate_decimals(lit("3.30227"), 4).mid() - 3.3022) < 1e-12);
  CHECK_THROWS_AS(truncate_decimals(Interval::from_bounds(1.99999, 2.00001), 4), CertificationError);
}

TEST_CASE("case family names") {
  CHECK(parse_case_family("C") == CaseFamily::C);
  CHECK(to_string(CaseFamily::D) == "D");
  CHECK_THROWS_AS(parse_case_family("E"), DomainError);
}
