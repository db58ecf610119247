#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "dq/interval.hpp"
#include "dq/nat.hpp"

namespace dq {

// b0 = p_1 p_2 ... p_23.
Nat swap_b0();

// Window for b: b0 <= b < 1.9011e33 with omega(b) = 23.
Interval swap_window_hi();

// UB(a) = UD^(1/2) (16a^2 + 4a)^(-1/2).
Interval ub_of(const Nat& a, const Interval& UD);

// 4 b0 for odd a, 2 b0 for a = 2, 6, b0 for a = 4. Domain 1 <= a <= 7.
Nat b1_of(const Nat& a);

// Largest a with 4a(4a+1) b0^2 < UD.
Nat swap_max_a(const Interval& UD);

// Primes p among p_1..p_23 with b0 / p * p_24 > window_hi: each must divide b.
std::vector<std::uint64_t> forced_small_primes(const Nat& window_lo, const Interval& window_hi);

// Largest v with (p_24 ... p_{23+v}) / (p_23 ... p_{24-v}) < UB / b1.
unsigned max_v(const Nat& a, const Interval& UD);

// K(u): largest K with p_24 ... p_{22+u} p_K / (p_23 ... p_{24-u}) < UB/b1.
// J(u): smallest J >= 6 with p_24 ... p_{23+u} / (p_23 ... p_{25-u} p_J) < UB/b1.
struct SwapRange {
  unsigned u = 0;
  std::size_t K = 0;
  std::size_t J = 0;
};

SwapRange swap_range(const Nat& a, const Interval& UD, unsigned u);

struct SwapCandidate {
  Nat a;
  Nat base;                          // b1(a)
  std::vector<std::size_t> removed;  // indices j, ascending, 6 <= j <= 23
  std::vector<std::size_t> added;    // indices k, ascending, k >= 24
  Nat value;                         // base * prod p_k / prod p_j
  Nat q;                             // floor(UB / value); 1 throughout
  std::string str() const;
};

// All b = b1 * prod p_k / prod p_j below UB(a), for u = 0..max_v swaps
// (u = 0 is b1 itself). Order: u ascending, then added, then removed tuples
// in lexicographic order.
std::vector<SwapCandidate> enumerate_candidates(const Nat& a, const Interval& UD);

struct DischargeReport {
  Nat a;
  std::size_t checked = 0;
  std::vector<SwapCandidate> survivors;  // ab + 1 a perfect square
  bool clear() const { return survivors.empty(); }
};

// Pair stage: a candidate is discharged when ab + 1 is not a perfect square.
// Survivors are returned, never dropped.
DischargeReport discharge_candidates(const Nat& a, const std::vector<SwapCandidate>& candidates);

struct SwapCensus {
  std::vector<unsigned> v;  // max_v for a = 1..max_a
  std::vector<std::uint64_t> forced;
  std::vector<SwapCandidate> candidates;
  std::vector<DischargeReport> reports;
  bool all_q_one = true;
  bool clear() const;
};

// Runs forced primes, max_v, enumeration and discharge for a = 1..swap_max_a(UD).
SwapCensus run_prime_swap(const Interval& UD);

}  // namespace dq
