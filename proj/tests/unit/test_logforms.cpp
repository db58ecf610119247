#include <doctest.h>

#include <cmath>
#include <random>

#include "dq/alpha.hpp"
#include "dq/errors.hpp"
#include "dq/logforms.hpp"
#include "dq/primes.hpp"

using namespace dq;

namespace {

const CaseParams& row(const std::string& tag) {
  static const auto table = parameter_table();
  return find_row(table, tag);
}

Interval p10(double e) { return exp10(Interval::from_bounds(e, e)); }

std::vector<CaseParams> family(CaseFamily f) {
  std::vector<CaseParams> out;
  for (const auto& r : parameter_table())
    if (r.family == f) out.push_back(r);
  return out;
}

}  // namespace

TEST_CASE("aleksentsev_constant") {
  const Interval k = aleksentsev_constant(3, 4);
  CHECK(std::llround(k.mid() / 1e7) == 15013);
  const double one = 5.3 * 1 * 4 * 81 * 6 * 31.44 * std::log(3.0);
  CHECK(std::abs(aleksentsev_constant(1, 1).mid() / one - 1) < 1e-14);
  Interval coarse;
  {
    PrecisionScope p(64);
    coarse = aleksentsev_constant(3, 4);
  }
  CHECK(coarse.contains(k));
  CHECK(certainly_less(aleksentsev_constant(3, 4), j_bound_constant()));
  CHECK_THROWS_AS(aleksentsev_constant(0, 4), DomainError);
}

TEST_CASE("g_values at the seed") {
  const Interval C1 = p10(72.188), C0 = p10(72.178);
  const GVector g = g_values(row("AI"), C0, C1);
  const double L = 72.188 * std::log(10.0);
  CHECK(std::abs(g.g1.mid() - (1.5 + (std::log(4.0) - std::log(std::sqrt(20.0) * 146)) / L)) < 1e-12);
  CHECK(certainly_less(g.g1, Interval(Rational(3, 2))));
  CHECK(certainly_greater(g.g2, Interval(1L)));
  CHECK(g.side.all());
  CHECK(g_values(row("D"), C0, C1).f_choice == Threshold::C0);
  CHECK(g_values(row("AI"), C0, C1).f_choice == Threshold::C1);
  CHECK(g_values(row("BI"), C0, C1).e_choice == Threshold::C0);
  CHECK(g_values(row("CI"), C0, C1).e_choice == Threshold::C0);
  CHECK(g_values(row("D"), C0, C1).e_choice == Threshold::C0);
  CHECK(g_values(row("AI"), C0, C1).e_choice == Threshold::C1);
  CHECK_THROWS_AS(g_values(row("AI"), C1, C0), DomainError);
}

TEST_CASE("side conditions hold for every row along the iteration") {
  for (const double c1 : {72.188, 67.9, 60.1, 56.5, 51.45}) {
    for (const auto& r : parameter_table()) {
      INFO(r.tag << " at " << c1);
      CHECK(g_values(r, p10(c1 - 0.01), p10(c1)).side.all());
    }
  }
}

TEST_CASE("g1 and g2 sandwich log(4AC + 4)") {
  std::mt19937_64 rng(3);
  for (const char* tag : {"AI", "AII"}) {
    const CaseParams& r = row(tag);
    for (const int e : {20, 35, 50, 70}) {
      Nat c = 1;
      for (int i = 0; i < e; ++i) c *= 10;
      const GVector g = g_values(r, Interval(Nat(c / 10)), Interval(c));
      const Interval L = log(Interval(c));
      // B <= C^tau / beta and A < B / rho
      const Interval b_max = sqrt(Interval(c)) / r.beta;
      const Interval a_max = b_max / r.rho;
      for (int i = 0; i < 50; ++i) {
        const double t = std::uniform_real_distribution<double>(0, 1)(rng);
        const Interval A = Interval(r.A0) + (a_max - Interval(r.A0)) * Interval::from_bounds(t, t);
        const Interval value = log(Interval(4L) * A * Interval(c) + Interval(4L));
        CHECK(certainly_less_equal(value, g.g1 * L + Interval::from_decimal("1e-15")));
        CHECK(certainly_less_equal(g.g2 * L, value));
      }
    }
  }
}

TEST_CASE("solve_j_bound brackets the largest admissible j") {
  const Interval C1 = p10(72.188), C0 = p10(72.178);
  const GVector g = g_values(row("AI"), C0, C1);
  const JBound j = solve_j_bound(g, C0, C1);
  CHECK(j.j.upper() / j.j.lower() <= 1 + 1e-6);
  CHECK(j.excess.upper() < 0);
  const double L1 = std::log(10.0) * 72.188;
  auto rhs = [&](double jj) {
    return 1.50131e11 * g.g3.mid() * g.g5.mid() * L1 * L1 * std::log(2 * jj / (g.g6.mid() * std::log(10.0) * 72.178));
  };
  CHECK(rhs(j.j.lower()) / j.j.lower() > 1 - 1e-6);
  CHECK(rhs(j.j.upper()) / j.j.upper() < 1 + 1e-6);

  double prev = 0;
  for (const double c1 : {40.0, 50.0, 60.0, 72.188, 80.0}) {
    const JBound b = solve_j_bound(row("AI"), p10(c1 - 0.01), p10(c1));
    CHECK(b.j.lower() > prev);
    prev = b.j.lower();
  }
}

TEST_CASE("absorption margin exceeds one") {
  const Interval C1 = p10(72.188), C0 = p10(72.178);
  for (const auto& r : parameter_table()) {
    INFO(r.tag);
    CHECK(certainly_less_equal(Interval(1L), absorption_margin(g_values(r, C0, C1), C0)));
  }
}

TEST_CASE("iterated d bounds") {
  struct Expect {
    CaseFamily f;
    double published;
  };
  for (const Expect e : {Expect{CaseFamily::A, 67.859}, Expect{CaseFamily::B, 60.057}, Expect{CaseFamily::C, 56.528},
                         Expect{CaseFamily::D, 51.416}}) {
    INFO(to_string(e.f));
    const DBoundResult r = iterate_d_bound(e.f);
    CHECK(r.converged);
    CHECK(std::abs(r.log10_d_bound.mid() - e.published) < 0.1);
    CHECK(r.log10_d_bound.upper() <= e.published);
    // contraction: every step strictly lowers C1 until the last
    double prev = 72.188;
    for (const auto& s : r.iterations) {
      CHECK(s.log10_c1_in == doctest::Approx(prev));
      CHECK(s.log10_c1_out <= s.log10_c1_in);
      prev = s.log10_c1_out;
    }
    CHECK(r.iterations.front().log10_c1_out < 72.188);
  }
}

TEST_CASE("case B is bound by BI with the maximal alpha") {
  const DBoundResult r = iterate_d_bound(CaseFamily::B);
  CHECK(r.iterations.back().binding_row == "BI");
  DBoundOptions stated;
  stated.alpha_source = AlphaSource::Stated;
  const DBoundResult s = iterate_d_bound(CaseFamily::B, 72.188, stated);
  CHECK(s.log10_d_bound.mid() > r.log10_d_bound.mid());
  CHECK(s.iterations.back().binding_row == "BII");
}

TEST_CASE("fixed point is insensitive to the C0 gap") {
  for (const CaseFamily f : {CaseFamily::A, CaseFamily::B, CaseFamily::C, CaseFamily::D}) {
    const double base = iterate_d_bound(f).log10_d_bound.mid();
    for (const double gap : {0.001, 0.1, 1.0, 3.0}) {
      DBoundOptions o;
      o.c0_gap_log10 = gap;
      INFO(to_string(f) << " gap " << gap);
      CHECK(std::abs(iterate_d_bound(f, 72.188, o).log10_d_bound.mid() - base) < 0.05);
    }
  }
}

TEST_CASE("the two g6 forms give nearly equal bounds") {
  DBoundOptions o;
  o.g6_variant = G6Variant::RhoA0;
  for (const CaseFamily f : {CaseFamily::A, CaseFamily::D}) {
    const double a = iterate_d_bound(f).log10_d_bound.mid();
    const double b = iterate_d_bound(f, 72.188, o).log10_d_bound.mid();
    CHECK(std::abs(a - b) < 1e-6);
  }
  // rho A0 = 3456 > 4, visible only at small C1
  const Interval C1 = p10(13), C0 = p10(12.9);
  const GVector d = g_values(row("AII"), C0, C1, G6Variant::Displayed);
  const GVector r = g_values(row("AII"), C0, C1, G6Variant::RhoA0);
  CHECK(certainly_less(d.g6, r.g6));
}

TEST_CASE("iteration accepts family rows directly") {
  const DBoundResult r = iterate_d_bound(family(CaseFamily::C), "C", 72.188);
  CHECK(std::abs(r.log10_d_bound.mid() - iterate_d_bound(CaseFamily::C).log10_d_bound.mid()) < 1e-12);
}

TEST_CASE("large a") {
  const SmallestElementBound s = case_a_max_a(Nat(74'000'000));
  CHECK(std::abs(s.d_bound.log10_d_bound.mid() - std::log10(6.1e50)) < 0.1);
  CHECK(s.a_bound.upper() <= 7.29e7);
  CHECK(s.contradiction);
  const Nat a0(74'000'000);
  CHECK(s.row.B0 == isqrt(4 * a0 * a0 * a0) + 1);
}

TEST_CASE("raising the trial A0 lowers the d bound") {
  double prev = 1e9;
  for (const long a0 : {10'000'000L, 40'000'000L, 74'000'000L, 200'000'000L}) {
    const double d = case_a_max_a(Nat(a0)).d_bound.log10_d_bound.mid();
    CHECK(d < prev);
    prev = d;
  }
  CHECK_THROWS_AS(large_a_row(Nat(100)), DomainError);
}
