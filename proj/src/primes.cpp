#include "dq/primes.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "dq/errors.hpp"

namespace dq {
namespace {

constexpr std::uint64_t kSharedLimit = 10'000'000;
constexpr std::size_t kMaxPrimeCount = 10'000;

std::uint64_t count_divisors_rec(const std::vector<std::pair<Nat, unsigned>>& f, std::size_t i, const Nat& current,
                                 const Nat& H) {
  if (i == f.size()) return 1;
  std::uint64_t total = 0;
  Nat value = current;
  for (unsigned e = 0; e <= f[i].second; ++e) {
    if (value > H) break;
    total += count_divisors_rec(f, i + 1, value, H);
    value *= f[i].first;
  }
  return total;
}

std::uint64_t count_divisors_u64(const std::vector<std::pair<std::uint64_t, unsigned>>& f, std::size_t i,
                                 std::uint64_t current, std::uint64_t H) {
  if (i == f.size()) return 1;
  std::uint64_t total = 0;
  std::uint64_t value = current;
  for (unsigned e = 0; e <= f[i].second; ++e) {
    total += count_divisors_u64(f, i + 1, value, H);
    if (e == f[i].second || value > H / f[i].first) break;
    value *= f[i].first;
  }
  return total;
}

}  // namespace

PrimeTable::PrimeTable(std::uint64_t limit) : limit_(limit) {
  std::vector<bool> composite(limit + 1, false);
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    primes_.push_back(static_cast<std::uint32_t>(i));
    for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = true;
  }
}

const PrimeTable& PrimeTable::shared() {
  static const PrimeTable table(kSharedLimit);
  return table;
}

SmallestFactorSieve::SmallestFactorSieve(std::uint32_t limit) : limit_(limit), spf_(std::size_t{limit} + 1, 0) {
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (spf_[i] != 0) continue;
    for (std::uint64_t j = i; j <= limit; j += i)
      if (spf_[j] == 0) spf_[j] = static_cast<std::uint32_t>(i);
  }
}

void SmallestFactorSieve::factor_into(std::uint32_t n, std::vector<std::pair<std::uint64_t, unsigned>>& out) const {
  while (n > 1) {
    const std::uint32_t p = spf_[n];
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    auto it = std::lower_bound(out.begin(), out.end(), std::uint64_t{p},
                               [](const auto& pe, std::uint64_t q) { return pe.first < q; });
    if (it != out.end() && it->first == p) {
      it->second += e;
    } else {
      out.insert(it, {p, e});
    }
  }
}

std::vector<std::uint64_t> primes_up_to(std::size_t k) {
  if (k == 0) throw DomainError("primes_up_to: empty request (k = 0)");
  if (k > kMaxPrimeCount) throw GuardError("primes_up_to: k = " + std::to_string(k) + " exceeds 10^4");
  const auto table = PrimeTable::shared().primes();
  return {table.begin(), table.begin() + static_cast<std::ptrdiff_t>(k)};
}

std::uint64_t nth_prime(std::size_t i) {
  if (i == 0) throw DomainError("nth_prime: primes are 1-indexed");
  if (i > kMaxPrimeCount) throw GuardError("nth_prime: index exceeds 10^4");
  return PrimeTable::shared().primes()[i - 1];
}

Nat primorial(std::size_t k) {
  Nat product = 1;
  if (k == 0) return product;
  for (const std::uint64_t p : primes_up_to(k)) product *= nat_from_u64(p);
  return product;
}

Factorization factorize(const Nat& n) {
  if (n < 1) throw DomainError("factorize: n must be >= 1");
  Factorization out;
  if (fits_u64(n)) {
    std::uint64_t m = to_u64(n);
    for (const std::uint32_t p : PrimeTable::shared().primes()) {
      if (std::uint64_t{p} * p > m) break;
      if (m % p != 0) continue;
      unsigned e = 0;
      while (m % p == 0) {
        m /= p;
        ++e;
      }
      out.emplace_back(Nat(p), e);
    }
    if (m > 1) {
      const std::uint64_t lim = PrimeTable::shared().limit();
      // All primes <= limit were tried; m is prime when m <= limit^2.
      if (m / lim > lim) throw DomainError("factorize: cofactor " + std::to_string(m) + " beyond trial-division range");
      out.emplace_back(nat_from_u64(m), 1);
    }
    return out;
  }
  Nat m = n;
  for (const std::uint32_t p : PrimeTable::shared().primes()) {
    if (fits_u64(m) && to_u64(m) < 0xFFFFFFFFULL * 0xFFFFFFFFULL) {
      Factorization rest = factorize(m);
      for (auto& pe : rest) {
        if (!out.empty() && out.back().first == pe.first) {
          out.back().second += pe.second;
        } else {
          out.push_back(std::move(pe));
        }
      }
      return out;
    }
    if (mpz_divisible_ui_p(m.get_mpz_t(), p) == 0) continue;
    unsigned e = 0;
    while (mpz_divisible_ui_p(m.get_mpz_t(), p) != 0) {
      mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
      ++e;
    }
    out.emplace_back(Nat(p), e);
  }
  if (m > 1) {
    const Nat lim = nat_from_u64(PrimeTable::shared().limit());
    if (m > lim * lim) throw DomainError("factorize: cofactor " + m.get_str() + " beyond trial-division range");
    out.emplace_back(m, 1);
  }
  return out;
}

unsigned omega(const Nat& n) {
  if (n < 1) throw DomainError("omega: n must be >= 1");
  return static_cast<unsigned>(factorize(n).size());
}

std::uint64_t count_divisors_upto(const Factorization& f, const Nat& H) {
  if (H < 1) return 0;
  bool small = fits_u64(H);
  for (const auto& pe : f) small = small && fits_u64(pe.first);
  if (small) {
    std::vector<std::pair<std::uint64_t, unsigned>> g;
    g.reserve(f.size());
    for (const auto& [p, e] : f) g.emplace_back(to_u64(p), e);
    return count_divisors_u64(g, 0, 1, to_u64(H));
  }
  return count_divisors_rec(f, 0, Nat(1), H);
}

std::uint64_t count_divisors_upto(const std::vector<std::pair<std::uint64_t, unsigned>>& f, std::uint64_t H) {
  if (H < 1) return 0;
  return count_divisors_u64(f, 0, 1, H);
}

std::uint64_t count_divisors_upto(const Nat& n, const Nat& H) {
  if (n < 1) throw DomainError("count_divisors_upto: n must be >= 1");
  return count_divisors_upto(factorize(n), H);
}

Nat isqrt(const Nat& n) {
  if (n < 0) throw DomainError("isqrt of a negative number");
  Nat r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

bool is_perfect_square(const Nat& n) { return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0; }

}  // namespace dq
