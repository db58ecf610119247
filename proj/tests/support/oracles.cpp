#include "oracles.hpp"

#include <cmath>
#include <functional>
#include <stdexcept>

namespace oracle {

bool is_square(std::uint64_t n) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r * r == n;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  std::vector<std::uint64_t> lo, hi;
  for (std::uint64_t e = 1; e * e <= n; ++e) {
    if (n % e) continue;
    lo.push_back(e);
    if (e != n / e) hi.push_back(n / e);
  }
  lo.insert(lo.end(), hi.rbegin(), hi.rend());
  return lo;
}

std::uint64_t divisors_upto(std::uint64_t n, std::uint64_t H) {
  std::uint64_t c = 0;
  for (const auto e : divisors(n)) c += e <= H;
  return c;
}

unsigned distinct_primes(std::uint64_t n) {
  unsigned w = 0;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    ++w;
    while (n % p == 0) n /= p;
  }
  return w + (n > 1);
}

std::vector<std::uint64_t> first_primes(std::size_t k) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t n = 2; out.size() < k; ++n) {
    bool prime = true;
    for (const auto p : out) {
      if (p * p > n) break;
      if (n % p == 0) {
        prime = false;
        break;
      }
    }
    if (prime) out.push_back(n);
  }
  return out;
}

std::vector<std::pair<std::uint64_t, std::uint64_t>> pairs(std::uint64_t limit) {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
  for (std::uint64_t a = 1; a <= limit; ++a)
    for (std::uint64_t b = a + 1; b <= limit; ++b)
      if (is_square(a * b + 1)) out.emplace_back(a, b);
  return out;
}

std::vector<std::tuple<std::uint64_t, std::uint64_t, std::uint64_t>> triples(std::uint64_t limit) {
  std::vector<std::vector<std::uint64_t>> up(limit + 1);
  for (const auto& [a, b] : pairs(limit)) up[a].push_back(b);
  std::vector<std::tuple<std::uint64_t, std::uint64_t, std::uint64_t>> out;
  for (std::uint64_t a = 1; a <= limit; ++a)
    for (std::size_t i = 0; i < up[a].size(); ++i)
      for (std::size_t j = i + 1; j < up[a].size(); ++j) {
        const auto b = up[a][i], c = up[a][j];
        if (is_square(b * c + 1)) out.emplace_back(a, b, c);
      }
  return out;
}

long double zeta_prime_2(std::uint64_t terms) {
  long double s = 0;
  for (std::uint64_t n = 2; n <= terms; ++n) s += std::log(static_cast<long double>(n)) / (static_cast<long double>(n) * n);
  const long double N = terms;
  const long double L = std::log(N);
  // tail beyond N: integral - f(N)/2 - f'(N)/12
  s += (L + 1) / N - L / (2 * N * N) - (1 - 2 * L) / (12 * N * N * N);
  return -s;
}

Sums sums(std::uint64_t x) {
  Sums s;
  for (std::uint64_t n = 1; n <= x; ++n) {
    const std::uint64_t e = 1ull << distinct_primes(n);
    const std::uint64_t g = 1ull << distinct_primes(2 * n - 1);
    s.E += e;
    s.F += static_cast<long double>(e) / n;
    s.G += static_cast<long double>(g) / (2 * n - 1);
  }
  return s;
}

std::uint64_t dH_sum(std::uint64_t N, std::uint64_t H) {
  std::uint64_t total = 0;
  for (std::uint64_t n = 2; n <= N; ++n) total += divisors_upto(n * n - 1, H);
  return total;
}

std::set<dq::Nat> swap_values(unsigned a, const dq::Interval& UD) {
  static const std::vector<std::uint64_t> P = first_primes(2000);
  const unsigned f = a % 2 ? 4 : (a == 2 || a == 6 ? 2 : 1);
  const dq::Interval scale(static_cast<long>(16 * a * a + 4 * a));
  auto below = [&](const dq::Nat& b) {
    const dq::Interval B(b);
    const dq::Interval lhs = B * B * scale;
    if (dq::certainly_less(lhs, UD)) return true;
    if (dq::certainly_less_equal(UD, lhs)) return false;
    throw std::runtime_error("swap oracle: undecided comparison");
  };
  std::set<dq::Nat> out;
  dq::Nat prefix = f;
  for (std::size_t i = 0; i < 5; ++i) prefix *= P[i];

  std::function<void(std::size_t, std::size_t, const dq::Nat&)> dfs = [&](std::size_t next, std::size_t have,
                                                                          const dq::Nat& prod) {
    if (have == 23) {
      if (below(prod)) out.insert(prod);
      return;
    }
    for (std::size_t i = next; i + (23 - have) <= P.size(); ++i) {
      dq::Nat least = prod;
      for (std::size_t k = i; k < i + (23 - have); ++k) least *= P[k];
      if (!below(least)) break;
      dfs(i + 1, have + 1, prod * P[i]);
    }
  };
  dfs(5, 5, prefix);
  return out;
}

}  // namespace oracle
