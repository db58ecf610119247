#include "dq/prime_swap.hpp"

#include <cmath>
#include <functional>

#include "dq/errors.hpp"
#include "dq/primes.hpp"

namespace dq {
namespace {

constexpr std::size_t kOmega = 23;
constexpr std::size_t kFirstSwappable = 6;
constexpr std::size_t kIndexCap = 10'000;

Nat p(std::size_t i) { return nat_from_u64(nth_prime(i)); }

// Product p_i over an index range [lo, hi]; empty ranges give 1.
Nat prod_range(std::size_t lo, std::size_t hi) {
  Nat r = 1;
  for (std::size_t i = lo; i <= hi; ++i) r *= p(i);
  return r;
}

Nat prod_indices(const std::vector<std::size_t>& idx) {
  Nat r = 1;
  for (const std::size_t i : idx) r *= p(i);
  return r;
}

// Certified b1 * num / den < UB.
bool below_ub(const Nat& b1, const Nat& num, const Nat& den, const Interval& ub) {
  const Interval lhs = Interval(Nat(b1 * num));
  const Interval rhs = ub * Interval(den);
  if (certainly_less(lhs, rhs)) return true;
  if (certainly_less_equal(rhs, lhs)) return false;
  throw CertificationError("prime swap: comparison with UB undecided at " + b1.get_str() + "*" + num.get_str() + "/" +
                           den.get_str());
}

void combinations(std::size_t lo, std::size_t hi, unsigned size,
                  const std::function<void(const std::vector<std::size_t>&)>& visit) {
  std::vector<std::size_t> cur;
  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    if (cur.size() == size) {
      visit(cur);
      return;
    }
    for (std::size_t i = start; i + (size - cur.size()) <= hi + 1; ++i) {
      cur.push_back(i);
      rec(i + 1);
      cur.pop_back();
    }
  };
  rec(lo);
}

std::string join(const std::vector<std::size_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

}  // namespace

Nat swap_b0() { return primorial(kOmega); }

Interval swap_window_hi() { return Interval::from_decimal("1.9011e33"); }

Interval ub_of(const Nat& a, const Interval& UD) {
  if (a < 1) throw DomainError("ub_of: a must be >= 1");
  const Interval A(a);
  return sqrt(UD / (Interval(16L) * A * A + Interval(4L) * A));
}

Nat b1_of(const Nat& a) {
  if (a < 1 || a > 7) throw DomainError("b1_of: a must lie in 1..7, got " + a.get_str());
  const Nat b0 = swap_b0();
  if (a % 2 == 1) return 4 * b0;
  if (a == 2 || a == 6) return 2 * b0;
  return b0;
}

Nat swap_max_a(const Interval& UD) {
  const Nat b0 = swap_b0();
  Nat a = 0;
  for (;;) {
    const Nat next = a + 1;
    const Interval lhs(Nat(4 * next * (4 * next + 1) * b0 * b0));
    if (certainly_less(lhs, UD)) {
      a = next;
    } else if (certainly_less_equal(UD, lhs)) {
      return a;
    } else {
      throw CertificationError("swap_max_a: 4a(4a+1)b0^2 vs UD undecided at a = " + next.get_str());
    }
  }
}

std::vector<std::uint64_t> forced_small_primes(const Nat& window_lo, const Interval& window_hi) {
  std::vector<std::uint64_t> out;
  for (std::size_t i = 1; i <= kOmega; ++i) {
    const Nat pi = p(i);
    if (window_lo % pi != 0) throw DomainError("forced_small_primes: window_lo must be divisible by p_1..p_23");
    const Interval swapped(Nat(window_lo / pi * p(kOmega + 1)));
    if (certainly_less(window_hi, swapped)) {
      out.push_back(nth_prime(i));
    } else if (!certainly_less_equal(swapped, window_hi)) {
      throw CertificationError("forced_small_primes: comparison undecided for p = " + pi.get_str());
    }
  }
  return out;
}

unsigned max_v(const Nat& a, const Interval& UD) {
  const Nat b1 = b1_of(a);
  const Interval ub = ub_of(a, UD);
  unsigned v = 0;
  while (v + 1 <= kOmega - kFirstSwappable + 1) {
    const unsigned next = v + 1;
    if (!below_ub(b1, prod_range(kOmega + 1, kOmega + next), prod_range(kOmega + 1 - next, kOmega), ub)) break;
    v = next;
  }
  return v;
}

SwapRange swap_range(const Nat& a, const Interval& UD, unsigned u) {
  if (u < 1 || u > kOmega - kFirstSwappable + 1) throw DomainError("swap_range: u out of range");
  const Nat b1 = b1_of(a);
  const Interval ub = ub_of(a, UD);
  SwapRange r;
  r.u = u;
  const Nat head = prod_range(kOmega + 1, kOmega + u - 1);
  const Nat den_k = prod_range(kOmega + 1 - u, kOmega);
  // The smallest admissible K is 23 + u; the ratio grows with K.
  for (std::size_t K = kOmega + u;; ++K) {
    if (K > kIndexCap) throw CertificationError("swap_range: K still admissible at the index cap 10^4");
    if (!below_ub(b1, head * p(K), den_k, ub)) break;
    r.K = K;
  }
  if (r.K == 0) return r;  // no u-swap fits below UB
  const Nat num_j = prod_range(kOmega + 1, kOmega + u);
  const Nat tail = prod_range(kOmega + 2 - u, kOmega);
  for (std::size_t J = kFirstSwappable; J <= kOmega + 1 - u; ++J) {
    if (below_ub(b1, num_j, tail * p(J), ub)) {
      r.J = J;
      break;
    }
  }
  return r;
}

std::string SwapCandidate::str() const {
  return "a=" + a.get_str() + " added=[" + join(added) + "] removed=[" + join(removed) + "] q=" + q.get_str() +
         " b=" + value.get_str();
}

std::vector<SwapCandidate> enumerate_candidates(const Nat& a, const Interval& UD) {
  const Nat b1 = b1_of(a);
  const Interval ub = ub_of(a, UD);
  std::vector<SwapCandidate> out;
  // Double-precision screen: a tuple whose log ratio exceeds the limit by
  // 1e-6 fails the exact test too (rounding error is far below 1e-6).
  const double log_limit = std::log((ub / Interval(b1)).upper());
  auto log_sum = [](const std::vector<std::size_t>& idx) {
    double s = 0;
    for (const std::size_t i : idx) s += std::log(static_cast<double>(nth_prime(i)));
    return s;
  };
  auto emit = [&](const std::vector<std::size_t>& added, const std::vector<std::size_t>& removed) {
    if (log_sum(added) - log_sum(removed) > log_limit + 1e-6) return;
    const Nat num = prod_indices(added);
    const Nat den = prod_indices(removed);
    if (!below_ub(b1, num, den, ub)) return;
    const Nat base = b1 * num / den;
    const auto q = (ub / Interval(base)).floor_exact();
    if (!q) throw CertificationError("enumerate_candidates: multiplier undecided for " + base.get_str());
    for (Nat k = 1; k <= *q; ++k) {
      SwapCandidate c;
      c.a = a;
      c.base = b1;
      c.added = added;
      c.removed = removed;
      c.value = base * k;
      c.q = k;
      out.push_back(std::move(c));
    }
  };
  emit({}, {});
  const unsigned v = max_v(a, UD);
  for (unsigned u = 1; u <= v; ++u) {
    const SwapRange r = swap_range(a, UD, u);
    if (r.K == 0 || r.J == 0) continue;
    combinations(kOmega + 1, r.K, u, [&](const std::vector<std::size_t>& ks) {
      combinations(r.J, kOmega, u, [&](const std::vector<std::size_t>& js) { emit(ks, js); });
    });
  }
  return out;
}

DischargeReport discharge_candidates(const Nat& a, const std::vector<SwapCandidate>& candidates) {
  DischargeReport rep;
  rep.a = a;
  for (const auto& c : candidates) {
    if (c.a != a) continue;
    ++rep.checked;
    if (is_perfect_square(a * c.value + 1)) rep.survivors.push_back(c);
  }
  return rep;
}

bool SwapCensus::clear() const {
  for (const auto& r : reports)
    if (!r.clear()) return false;
  return true;
}

SwapCensus run_prime_swap(const Interval& UD) {
  SwapCensus census;
  const Nat a_max = swap_max_a(UD);
  if (a_max > 7) throw DomainError("run_prime_swap: UD admits a = " + a_max.get_str() + " > 7; the b1 rule covers a <= 7");
  census.forced = forced_small_primes(swap_b0(), swap_window_hi());
  for (Nat a = 1; a <= a_max; ++a) {
    census.v.push_back(max_v(a, UD));
    const auto cands = enumerate_candidates(a, UD);
    for (const auto& c : cands)
      if (c.q != 1) census.all_q_one = false;
    census.reports.push_back(discharge_candidates(a, cands));
    census.candidates.insert(census.candidates.end(), cands.begin(), cands.end());
  }
  return census;
}

}  // namespace dq
