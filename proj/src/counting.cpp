#include "dq/counting.hpp"

#include <cmath>

#include "dq/divisor_sums.hpp"
#include "dq/errors.hpp"
#include "dq/primes.hpp"

namespace dq {
namespace {

Interval lit(const char* s) { return Interval::from_decimal(s); }

Interval pow2(unsigned k) { return pow(Interval(2L), static_cast<long>(k)); }

Interval mult(const Multiplier& m) { return Interval(m.value); }

std::string fac(const Multiplier& m) { return std::to_string(m.value); }

// Pairs {a,b} with ab + 1 = r^2, r <= R, a below H: half the dH bound.
Interval half_dH(const Interval& R, const Interval& H) { return dH_sum_bound(R, H) / Interval(2L); }

Nat pow10(unsigned k) {
  Nat r = 1;
  for (unsigned i = 0; i < k; ++i) r *= 10;
  return r;
}

}  // namespace

Interval published_log10_d(CaseFamily family) {
  switch (family) {
    case CaseFamily::A: return lit("67.859");
    case CaseFamily::B: return lit("60.057");
    case CaseFamily::C: return lit("56.528");
    case CaseFamily::D: return lit("51.416");
  }
  throw DomainError("published_log10_d: unknown family");
}

Interval published_d(CaseFamily family) { return exp10(published_log10_d(family)); }

Interval split_d_bound() { return lit("7.228e67"); }

unsigned omega_cap(const Interval& b_max) {
  if (!certainly_less_equal(Interval(2L), b_max)) throw DomainError("omega_cap: b_max must be >= 2");
  unsigned k = 1;
  while (certainly_less_equal(Interval(primorial(k + 1)), b_max)) ++k;
  if (!certainly_less(b_max, Interval(primorial(k + 1))))
    throw CertificationError("omega_cap: b_max straddles primorial(" + std::to_string(k + 1) + ")");
  return k;
}

std::vector<const Multiplier*> CountMultipliers::all() const {
  return {&a_triples, &a_extensions, &a_split_extensions, &b_extensions, &c_triple_factor,
          &c_fifth,   &c_extensions, &c_pairs,            &d_doubles,    &d_extensions};
}

bool CountMultipliers::set(const std::string& name, long value) {
  for (Multiplier* m : {&a_triples, &a_extensions, &a_split_extensions, &b_extensions, &c_triple_factor, &c_fifth,
                        &c_extensions, &c_pairs, &d_doubles, &d_extensions}) {
    if (m->name == name) {
      m->value = value;
      return true;
    }
  }
  return false;
}

std::vector<Interval> published_m_values() {
  std::vector<Interval> m;
  for (const char* s : {"177", "499686", "1.7e9", "6.4e12", "2.9e16", "1.4e20", "7.8e23", "4.8e27"})
    m.push_back(lit(s));
  return m;
}

CaseACount count_case_A(const CaseAOptions& options) {
  const CountMultipliers& mu = options.multipliers;
  CaseACount out;
  out.radius = pow(options.d_bound / Interval(16L), Rational(1, 4));
  out.b_max = sqrt(options.d_bound / Interval(20L));
  out.omega_cap = omega_cap(out.b_max);
  out.doubles = half_dH(out.radius, out.radius);
  const Interval pair_factor = mult(mu.a_triples) * mult(mu.a_extensions);
  out.unrefined = pair_factor * pow2(out.omega_cap + 1) * out.doubles;
  out.unrefined_swapped = pair_factor * pow2(out.omega_cap) * out.doubles;

  std::vector<Interval> m{Interval(4L)};
  const auto given = options.m_values.empty() ? published_m_values() : options.m_values;
  m.insert(m.end(), given.begin(), given.end());
  for (std::size_t i = 1; i < m.size(); ++i)
    if (!certainly_less(m[i - 1], m[i])) throw DomainError("count_case_A: m values must increase from 4");

  CountReport& rep = out.refined;
  rep.case_tag = "A";
  rep.radius = out.radius;
  rep.subtotal = Interval(0L);
  const unsigned last_cap = out.omega_cap - (options.prime_swap ? 1 : 0);
  rep.omega_cap = last_cap;
  const Interval d_quarter = pow(options.split_d, Rational(1, 4));
  for (std::size_t i = 0; i < m.size(); ++i) {
    // Range m_i a < b <= m_{i+1} a: b < d^(1/4) m_{i+1}^(1/2) / 2 and a < R / m_i^(1/2).
    const unsigned w = i + 1 < m.size() ? omega_cap(d_quarter * sqrt(m[i + 1]) / Interval(2L)) : last_cap;
    const Interval sum = dH_sum_bound(out.radius, out.radius / sqrt(m[i]));
    const Interval term = mult(mu.a_triples) * mult(mu.a_split_extensions) * pow2(w + 1) * sum;
    rep.detail.push_back({"m=" + m[i].str(3) + " w<=" + std::to_string(w), term,
                          fac(mu.a_triples) + "*" + fac(mu.a_split_extensions) + "*2^" + std::to_string(w + 1)});
    rep.subtotal += term;
  }
  return out;
}

CaseBCount count_case_B(const Interval& d_bound, const CountMultipliers& mu) {
  CaseBCount out;
  out.radius = pow(d_bound / Interval(16L), Rational(1, 3));
  out.doubles = half_dH(out.radius, out.radius);
  out.report.case_tag = "B";
  out.report.radius = out.radius;
  out.report.subtotal = mult(mu.b_extensions) * out.doubles;
  out.report.detail.push_back({"doubles", out.doubles, "1/2"});
  out.report.detail.push_back({"quintuples", out.report.subtotal, fac(mu.b_extensions)});
  return out;
}

CaseCCount count_case_C(const Interval& eta, const Interval& d_bound, const CountMultipliers& mu) {
  if (!certainly_less_equal(Interval(1L), eta)) throw DomainError("count_case_C: eta must be >= 1");
  CaseCCount out;
  out.eta = eta;
  out.N3a = pow(d_bound / (Interval(4L) * eta), Rational(2, 5));
  out.N3b = sqrt(Interval(1L) + pow(pow(eta, 3L) * d_bound * d_bound / Interval(16L), Rational(1, 5)));
  out.b_max = pow(d_bound / Interval(4L), Rational(2, 5));
  out.omega_cap = omega_cap(out.b_max);
  const Interval cube = pow(log(out.N3a) + Interval(2L), 3L);
  out.branch_a = out.N3a / Interval(6L) * cube * mult(mu.c_triple_factor) * mult(mu.c_fifth) * mult(mu.c_extensions);
  out.branch_b = mult(mu.c_pairs) * pow2(out.omega_cap) * mult(mu.c_fifth) * mult(mu.c_extensions) *
                 dH_sum_bound(out.N3b, eta);
  out.report.case_tag = "C";
  out.report.radius = out.N3b;
  out.report.omega_cap = out.omega_cap;
  out.report.subtotal = max(out.branch_a, out.branch_b);
  out.report.detail.push_back({"a>eta", out.branch_a,
                               fac(mu.c_triple_factor) + "*" + fac(mu.c_fifth) + "*" + fac(mu.c_extensions)});
  out.report.detail.push_back({"a<=eta", out.branch_b,
                               fac(mu.c_pairs) + "*2^" + std::to_string(out.omega_cap) + "*" + fac(mu.c_fifth) + "*" +
                                   fac(mu.c_extensions)});
  return out;
}

CaseCCount optimize_eta(const Interval& d_bound, const CountMultipliers& mu) {
  auto h = [&](double t) {
    const double e = std::exp(t);
    const CaseCCount c = count_case_C(Interval::from_bounds(e, e), d_bound, mu);
    return std::max(c.branch_a.mid(), c.branch_b.mid());
  };
  const double phi = (std::sqrt(5.0) - 1) / 2;
  double lo = std::log(1e6), hi = std::log(1e15);
  double x1 = hi - phi * (hi - lo), x2 = lo + phi * (hi - lo);
  double h1 = h(x1), h2 = h(x2);
  for (int it = 0; it < 40; ++it) {
    if (h1 <= h2) {
      hi = x2;
      x2 = x1;
      h2 = h1;
      x1 = hi - phi * (hi - lo);
      h1 = h(x1);
    } else {
      lo = x1;
      x1 = x2;
      h1 = h2;
      x2 = lo + phi * (hi - lo);
      h2 = h(x2);
    }
  }
  const double best = h1 <= h2 ? x1 : x2;
  const double e = std::exp(best);
  return count_case_C(Interval::from_bounds(e, e), d_bound, mu);
}

CaseDCount count_case_D(const Interval& d_bound, const CountMultipliers& mu) {
  CaseDCount out;
  out.radius = pow(Interval(4L) * d_bound / Interval(9L), Rational(1, 3));
  out.doubles = mult(mu.d_doubles) * EF_bounds(out.radius).E_bound;
  out.report.case_tag = "D";
  out.report.radius = out.radius;
  out.report.subtotal = mult(mu.d_extensions) * out.doubles;
  out.report.detail.push_back({"doubles", out.doubles, fac(mu.d_doubles)});
  out.report.detail.push_back({"quintuples", out.report.subtotal, fac(mu.d_extensions)});
  return out;
}

std::vector<SplitThreshold> m_split_thresholds(const Interval& d_bound, const std::vector<unsigned>& omega_targets) {
  const Interval d_quarter = pow(d_bound, Rational(1, 4));
  std::vector<SplitThreshold> out;
  for (const unsigned w : omega_targets) {
    SplitThreshold t;
    t.omega = w;
    const Interval ratio = Interval(2L) * Interval(primorial(w + 1)) / d_quarter;
    t.supremum = ratio * ratio;
    const auto f = t.supremum.floor_exact();
    if (!f || !certainly_less(Interval(*f), t.supremum))
      throw CertificationError("m_split_thresholds: floor undecided for w = " + std::to_string(w));
    if (*f < 1) throw CertificationError("m_split_thresholds: no admissible m for w = " + std::to_string(w));
    t.exact_floor = *f;
    const std::size_t digits = t.exact_floor.get_str().size();
    const Nat scale = digits > 2 ? pow10(static_cast<unsigned>(digits - 2)) : Nat(1);
    const Nat lead = t.exact_floor / scale;
    t.two_sig = Interval(Nat(lead * scale));
    out.push_back(std::move(t));
  }
  return out;
}

TotalCount total_count(const TotalOptions& options) {
  TotalCount t;
  t.a = count_case_A(options.a).refined;
  t.b = count_case_B(published_d(CaseFamily::B), options.a.multipliers).report;
  t.c = (options.eta ? count_case_C(*options.eta, published_d(CaseFamily::C), options.a.multipliers)
                     : optimize_eta(published_d(CaseFamily::C), options.a.multipliers))
            .report;
  t.d = count_case_D(published_d(CaseFamily::D), options.a.multipliers).report;
  t.total = t.a.subtotal + t.b.subtotal + t.c.subtotal + t.d.subtotal;
  return t;
}

}  // namespace dq
