#include "dq/divisor_sums.hpp"

#include <algorithm>
#include <cfenv>
#include <cmath>
#include <span>
#include <string>
#include <vector>

#include "dq/errors.hpp"
#include "dq/primes.hpp"

// Built with -frounding-math: the F and G partial sums run under directed
// rounding modes.

namespace dq {
namespace {

constexpr std::uint64_t kExactSumsGuard = 100'000'000;
constexpr std::uint64_t kExactRationalBelow = 10'000;
constexpr std::uint64_t kDHGuard = 1'000'000;
constexpr std::uint32_t kSegment = 1u << 18;

// Calls visit(lo, w) with w[i] = omega(lo + i) for consecutive segments
// covering [1, limit].
template <class Visit>
void omega_segments(std::uint64_t limit, Visit visit) {
  const std::uint64_t root = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(limit))) + 1;
  std::vector<std::uint32_t> primes;
  for (const std::uint32_t p : PrimeTable::shared().primes()) {
    if (p > root) break;
    primes.push_back(p);
  }
  std::vector<std::uint32_t> rest(kSegment);
  std::vector<std::uint8_t> w(kSegment);
  for (std::uint64_t lo = 1; lo <= limit; lo += kSegment) {
    const std::uint64_t hi = std::min<std::uint64_t>(limit + 1, lo + kSegment);
    const std::size_t len = hi - lo;
    for (std::size_t i = 0; i < len; ++i) {
      rest[i] = static_cast<std::uint32_t>(lo + i);
      w[i] = 0;
    }
    for (const std::uint32_t p : primes) {
      if (std::uint64_t{p} * p >= hi) break;
      for (std::uint64_t m = (lo + p - 1) / p * p; m < hi; m += p) {
        const std::size_t i = m - lo;
        ++w[i];
        do rest[i] /= p;
        while (rest[i] % p == 0);
      }
    }
    for (std::size_t i = 0; i < len; ++i)
      if (rest[i] > 1) ++w[i];
    visit(lo, std::span<const std::uint8_t>(w.data(), len));
  }
}

struct DirectedSum {
  double lo = 0;
  double hi = 0;
};

// Adds num[i]/den[i] to both bounds, rounding each operation down for the
// lower bound and up for the upper bound.
void add_directed(DirectedSum& s, const std::vector<double>& num, const std::vector<double>& den) {
  const int saved = std::fegetround();
  std::fesetround(FE_DOWNWARD);
  double lo = s.lo;
  for (std::size_t i = 0; i < num.size(); ++i) lo += num[i] / den[i];
  std::fesetround(FE_UPWARD);
  double hi = s.hi;
  for (std::size_t i = 0; i < num.size(); ++i) hi += num[i] / den[i];
  std::fesetround(saved);
  s.lo = lo;
  s.hi = hi;
}

Interval pi_sq() {
  const Interval pi = Interval::pi();
  return pi * pi;
}

Interval G_or_zero(const Interval& x) {
  if (certainly_less(x, Interval(1L))) return Interval(0L);
  if (!certainly_less_equal(Interval(1L), x)) throw CertificationError("milk_bound: G argument straddles 1");
  return G_bound(x);
}

}  // namespace

ExactSums exact_sums(std::uint64_t x) {
  if (x < 1) throw DomainError("exact_sums: x must be >= 1");
  if (x > kExactSumsGuard)
    throw GuardError("exact_sums: x = " + std::to_string(x) + " exceeds the sieve guard " +
                     std::to_string(kExactSumsGuard));
  ExactSums out;
  out.x = x;
  std::uint64_t E = 0;
  DirectedSum F, G;
  Rational F_exact = 0, G_exact = 0;
  const bool rational = x < kExactRationalBelow;
  std::vector<double> num, den, gnum, gden;

  // Odd n = 2k - 1 <= 2x - 1 feed G; n <= x feed E and F.
  omega_segments(2 * x - 1, [&](std::uint64_t lo, std::span<const std::uint8_t> w) {
    num.clear();
    den.clear();
    gnum.clear();
    gden.clear();
    for (std::size_t i = 0; i < w.size(); ++i) {
      const std::uint64_t n = lo + i;
      const std::uint64_t two_w = std::uint64_t{1} << w[i];
      if (n <= x) {
        E += two_w;
        num.push_back(static_cast<double>(two_w));
        den.push_back(static_cast<double>(n));
        if (rational) F_exact += Rational(static_cast<unsigned long>(two_w), static_cast<unsigned long>(n));
      }
      if (n % 2 == 1) {
        gnum.push_back(static_cast<double>(two_w));
        gden.push_back(static_cast<double>(n));
        if (rational) G_exact += Rational(static_cast<unsigned long>(two_w), static_cast<unsigned long>(n));
      }
    }
    add_directed(F, num, den);
    add_directed(G, gnum, gden);
  });

  out.E = nat_from_u64(E);
  out.F = Interval::from_bounds(F.lo, F.hi);
  out.G = Interval::from_bounds(G.lo, G.hi);
  if (rational) {
    F_exact.canonicalize();
    G_exact.canonicalize();
    if (!out.F.contains(Interval(F_exact)) || !out.G.contains(Interval(G_exact)))
      throw CertificationError("exact_sums: directed-rounding sum does not enclose the exact rational");
    out.F = Interval(F_exact);
    out.G = Interval(G_exact);
  }
  return out;
}

EFBounds EF_bounds(const Interval& x) {
  if (!certainly_less_equal(Interval(1L), x)) throw DomainError("EF_bounds: x must be >= 1");
  const Interval L = log(x);
  const Interval p2 = pi_sq();
  EFBounds b;
  b.E_bound = Interval(6L) / p2 * x * L + Interval::from_decimal("0.787") * x +
              Interval::from_decimal("8.14") * pow(x, Rational(2, 3)) - Interval::from_decimal("0.3762");
  b.F_bound = Interval(3L) / p2 * L * L + Interval::from_decimal("1.3948") * L + Interval::from_decimal("0.4107") +
              Interval::from_decimal("3.253") * pow(x, Rational(-1, 3));
  return b;
}

Interval G_bound(const Interval& x) {
  if (!certainly_less_equal(Interval(1L), x)) throw DomainError("G_bound: x must be >= 1");
  const Interval L = log(x);
  return Interval(3L) / (Interval(2L) * pi_sq()) * L * L + Interval::from_decimal("3.1227147") * L +
         Interval::from_decimal("3.56851") + Interval::from_decimal("0.525") / x;
}

Nat dH_sum_exact(std::uint64_t N, std::uint64_t H) {
  if (N > kDHGuard)
    throw GuardError("dH_sum_exact: N = " + std::to_string(N) + " exceeds the guard " + std::to_string(kDHGuard));
  if (N < 2 || H < 1) return Nat(0);
  const SmallestFactorSieve sieve(static_cast<std::uint32_t>(N + 1));
  std::vector<std::pair<std::uint64_t, unsigned>> f;
  std::uint64_t total = 0;
  for (std::uint64_t n = 2; n <= N; ++n) {
    f.clear();
    sieve.factor_into(static_cast<std::uint32_t>(n - 1), f);
    sieve.factor_into(static_cast<std::uint32_t>(n + 1), f);
    total += count_divisors_upto(f, H);
  }
  return nat_from_u64(total);
}

Interval milk_bound(const Interval& N, const Interval& H) {
  if (!certainly_less_equal(Interval(1L), H)) throw DomainError("milk_bound: H must be >= 1");
  return Interval(2L) * N * G_or_zero((H + Interval(1L)) / Interval(2L)) +
         N * G_or_zero((H + Interval(4L)) / Interval(8L)) + N * G_or_zero((H + Interval(2L)) / Interval(4L)) +
         N * G_or_zero(H / Interval(8L));
}

Interval dH_sum_bound(const Interval& N, const Interval& H) {
  if (!certainly_less_equal(Interval(2L), N)) throw DomainError("dH_sum_bound: N must be >= 2");
  if (!certainly_less_equal(Interval(1L), H)) throw DomainError("dH_sum_bound: H must be >= 1");
  const Interval L = log(H);
  const Interval p2 = pi_sq();
  return N * (Interval(9L) / p2 * L * L + Interval::from_decimal("11.1468") * L - Interval::from_decimal("0.957") +
              Interval(24L) * L / (p2 * H) + Interval::from_decimal("44.14") / H);
}

AsymptoticConstants asymptotic_constants() {
  const Interval p2 = pi_sq();
  const Interval p4 = p2 * p2;
  const Interval gamma = Interval::euler_gamma();
  const Interval z = Interval::zeta_prime_2();
  AsymptoticConstants c;
  c.E_leading = Interval(6L) / p2;
  c.E_second = Interval(6L) / p4 * (p2 * (Interval(2L) * gamma - Interval(1L)) - Interval(12L) * z);
  c.F_leading = Interval(3L) / p2;
  c.F_second = Interval(12L) / p4 * (p2 * gamma - Interval(6L) * z);
  c.G_leading = Interval(1L) / p2;
  c.G_second = Interval(2L) / (Interval(3L) * p4) *
               (p2 * (Interval(6L) * gamma + Interval(7L) * Interval::ln2()) - Interval(36L) * z);
  return c;
}

}  // namespace dq
