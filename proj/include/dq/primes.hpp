#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "dq/nat.hpp"

namespace dq {

// Primes up to a fixed limit, built once by an Eratosthenes sieve and
// immutable afterwards.
class PrimeTable {
 public:
  explicit PrimeTable(std::uint64_t limit);

  // Process-wide table up to 10^7, built on first use.
  static const PrimeTable& shared();

  std::uint64_t limit() const { return limit_; }
  std::span<const std::uint32_t> primes() const { return primes_; }

 private:
  std::uint64_t limit_;
  std::vector<std::uint32_t> primes_;
};

// Smallest-prime-factor table on [0, limit]; spf(0) = spf(1) = 0.
class SmallestFactorSieve {
 public:
  explicit SmallestFactorSieve(std::uint32_t limit);

  std::uint32_t limit() const { return limit_; }
  std::uint32_t spf(std::uint32_t n) const { return spf_[n]; }

  // Appends the (prime, exponent) pairs of n, in ascending prime order, merging
  // with any factors already present in `out`.
  void factor_into(std::uint32_t n, std::vector<std::pair<std::uint64_t, unsigned>>& out) const;

 private:
  std::uint32_t limit_;
  std::vector<std::uint32_t> spf_;
};

using Factorization = std::vector<std::pair<Nat, unsigned>>;

// The first k primes, ascending. 1 <= k <= 10^4.
std::vector<std::uint64_t> primes_up_to(std::size_t k);

// p_i, 1-indexed (p_1 = 2). 1 <= i <= 10^4.
std::uint64_t nth_prime(std::size_t i);

// Product of the first k primes; primorial(0) = 1.
Nat primorial(std::size_t k);

// Complete factorization by trial division over PrimeTable::shared().
// Throws DomainError if n < 1 or if a cofactor above limit^2 remains.
Factorization factorize(const Nat& n);

// Number of distinct prime factors; omega(1) = 0.
unsigned omega(const Nat& n);

// Number of divisors e of n with e <= H.
std::uint64_t count_divisors_upto(const Nat& n, const Nat& H);
std::uint64_t count_divisors_upto(const Factorization& f, const Nat& H);
std::uint64_t count_divisors_upto(const std::vector<std::pair<std::uint64_t, unsigned>>& f, std::uint64_t H);

Nat isqrt(const Nat& n);
bool is_perfect_square(const Nat& n);

}  // namespace dq
