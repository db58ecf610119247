#pragma once

#include <cstdint>

#include "dq/interval.hpp"
#include "dq/nat.hpp"

namespace dq {

// E(x) = sum_{n<=x} 2^w(n), F(x) = sum_{n<=x} 2^w(n)/n,
// G(x) = sum_{n<=x} 2^w(2n-1)/(2n-1), with w the number of distinct primes.
struct ExactSums {
  std::uint64_t x = 0;
  Nat E;
  Interval F;
  Interval G;
};

// Segmented sieve, x <= 10^8. Below 10^4 F and G are also summed as exact
// rationals and the interval sums are checked to contain them.
ExactSums exact_sums(std::uint64_t x);

struct EFBounds {
  Interval E_bound;  // 6/pi^2 x log x + 0.787x + 8.14x^(2/3) - 0.3762
  Interval F_bound;  // 3/pi^2 log^2 x + 1.3948 log x + 0.4107 + 3.253x^(-1/3)
};

EFBounds EF_bounds(const Interval& x);

// 3/(2pi^2) log^2 x + 3.1227147 log x + 3.56851 + 0.525/x, for x >= 1.
Interval G_bound(const Interval& x);

// sum_{n=2}^{N} d_H(n^2 - 1), d_H counting divisors <= H. N <= 10^6.
Nat dH_sum_exact(std::uint64_t N, std::uint64_t H);

// 2N G((H+1)/2) + N G((H+4)/8) + N G((H+2)/4) + N G(H/8), each G replaced by
// G_bound. A G term whose argument is below 1 is an empty sum and contributes 0.
Interval milk_bound(const Interval& N, const Interval& H);

// N (9/pi^2 log^2 H + 11.1468 log H - 0.957 + 24 log H/(pi^2 H) + 44.14/H).
Interval dH_sum_bound(const Interval& N, const Interval& H);

struct AsymptoticConstants {
  Interval E_leading;        // 6/pi^2, coefficient of x log x
  Interval E_second;         // 6/pi^4 (pi^2 (2 gamma - 1) - 12 zeta'(2)), coefficient of x
  Interval F_leading;        // 3/pi^2, coefficient of log^2 x
  Interval F_second;         // 12/pi^4 (pi^2 gamma - 6 zeta'(2)), coefficient of log x
  Interval G_leading;        // 1/pi^2, coefficient of log^2 x
  Interval G_second;         // 2/(3 pi^4) (pi^2 (6 gamma + 7 log 2) - 36 zeta'(2)), coefficient of log x
};

AsymptoticConstants asymptotic_constants();

}  // namespace dq
