#include "dq/tuples.hpp"

#include <algorithm>
#include <iterator>

#include "dq/errors.hpp"
#include "dq/primes.hpp"

namespace dq {
namespace {

constexpr std::uint64_t kPairTripleGuard = 1'000'000;
constexpr std::uint64_t kQuadrupleGuard = 100'000;

using Partners = std::vector<std::vector<std::uint32_t>>;

void all_divisors(const std::vector<std::pair<std::uint64_t, unsigned>>& f, std::vector<std::uint64_t>& out) {
  out.assign(1, 1);
  for (const auto& [p, e] : f) {
    const std::size_t n = out.size();
    std::uint64_t pk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < n; ++i) out.push_back(out[i] * pk);
    }
  }
}

// partners[x] lists every y > x, y <= limit, with xy + 1 a square (ascending).
Partners build_partners(std::uint64_t limit) {
  Partners partners(limit + 1);
  const SmallestFactorSieve sieve(static_cast<std::uint32_t>(limit + 1));
  std::vector<std::pair<std::uint64_t, unsigned>> f;
  std::vector<std::uint64_t> divisors;
  // Every pair a < b <= limit has r = sqrt(ab + 1) < limit.
  for (std::uint64_t r = 2; r < limit; ++r) {
    const std::uint64_t n = r * r - 1;
    const std::uint64_t a_min = (n + limit - 1) / limit;  // b = n / a <= limit
    f.clear();
    sieve.factor_into(static_cast<std::uint32_t>(r - 1), f);
    sieve.factor_into(static_cast<std::uint32_t>(r + 1), f);
    all_divisors(f, divisors);
    for (const std::uint64_t a : divisors) {
      if (a < a_min || a >= r) continue;
      partners[a].push_back(static_cast<std::uint32_t>(n / a));
    }
  }
  for (auto& list : partners) std::sort(list.begin(), list.end());
  return partners;
}

std::vector<std::uint32_t> common_above(const std::vector<std::uint32_t>& x, const std::vector<std::uint32_t>& y,
                                        std::uint32_t floor) {
  std::vector<std::uint32_t> out;
  auto xi = std::upper_bound(x.begin(), x.end(), floor);
  auto yi = std::upper_bound(y.begin(), y.end(), floor);
  std::set_intersection(xi, x.end(), yi, y.end(), std::back_inserter(out));
  return out;
}

Tuple make_tuple(std::initializer_list<std::uint64_t> values) {
  std::vector<Nat> v;
  v.reserve(values.size());
  for (const auto x : values) v.push_back(nat_from_u64(x));
  return Tuple(std::move(v));
}

void require_triple(const Nat& a, const Nat& b, const Nat& c) {
  if (!(a >= 1 && a < b && b < c)) throw DomainError("triple must satisfy 1 <= a < b < c");
  if (!is_diophantine(Tuple({a, b, c}))) throw DomainError("not a Diophantine triple");
}

}  // namespace

Tuple::Tuple(std::vector<Nat> elements) : elements_(std::move(elements)) {
  if (elements_.size() < 2 || elements_.size() > 5) throw DomainError("tuple must have 2 to 5 elements");
  if (elements_.front() < 1) throw DomainError("tuple elements must be positive");
  for (std::size_t i = 1; i < elements_.size(); ++i)
    if (!(elements_[i - 1] < elements_[i])) throw DomainError("tuple elements must be strictly increasing");
}

Nat Tuple::root(std::size_t i, std::size_t j) const { return isqrt(elements_.at(i) * elements_.at(j) + 1); }

std::string Tuple::str() const {
  std::string s = "{";
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (i != 0) s += ",";
    s += elements_[i].get_str();
  }
  return s + "}";
}

std::string to_string(TripleType t) {
  switch (t) {
    case TripleType::A: return "A";
    case TripleType::B: return "B";
    case TripleType::C: return "C";
    case TripleType::D: return "D";
    case TripleType::None: return "None";
  }
  return "?";
}

bool is_diophantine(const Tuple& t) {
  for (std::size_t i = 0; i < t.size(); ++i)
    for (std::size_t j = i + 1; j < t.size(); ++j)
      if (!is_perfect_square(t[i] * t[j] + 1)) return false;
  return true;
}

Nat regular_third(const Nat& a, const Nat& b) {
  const Nat n = a * b + 1;
  if (!is_perfect_square(n)) throw DomainError("regular_third: ab+1 is not a perfect square");
  return a + b + 2 * isqrt(n);
}

Nat regular_fourth(const Nat& a, const Nat& b, const Nat& c) {
  require_triple(a, b, c);
  const Nat r = isqrt(a * b + 1);
  const Nat s = isqrt(a * c + 1);
  const Nat t = isqrt(b * c + 1);
  Nat d = a + b + c + 2 * a * b * c + 2 * r * s * t;
  if (!is_diophantine(Tuple({a, b, c, d}))) throw CertificationError("regular_fourth: extension failed the quadruple check");
  return d;
}

TripleType classify_triple(const Nat& a, const Nat& b, const Nat& c) {
  require_triple(a, b, c);
  const bool regular = c == a + b + 2 * isqrt(a * b + 1);
  const Nat b3 = b * b * b;
  const Nat c2 = c * c;
  if (4 * a < b) {
    if (4 * a * b + b + a < c && c2 < b3) return TripleType::A;
    if (regular) return TripleType::B;
    if (c2 > b3) return TripleType::C;
    return TripleType::None;
  }
  if (b < 4 * a && regular) return TripleType::D;
  return TripleType::None;
}

std::vector<Tuple> search_tuples(std::uint64_t limit, unsigned size) {
  if (size < 2 || size > 4) throw DomainError("search_tuples: size must be 2, 3 or 4");
  const std::uint64_t guard = size == 4 ? kQuadrupleGuard : kPairTripleGuard;
  if (limit > guard)
    throw GuardError("search_tuples: limit " + std::to_string(limit) + " exceeds the guard " + std::to_string(guard) +
                     " for tuples of size " + std::to_string(size) + "; exhaustive search cost grows like limit*log^2");
  std::vector<Tuple> out;
  if (limit < 2) return out;
  const Partners partners = build_partners(limit);
  for (std::uint32_t a = 1; a <= limit; ++a) {
    for (const std::uint32_t b : partners[a]) {
      if (size == 2) {
        out.push_back(make_tuple({a, b}));
        continue;
      }
      for (const std::uint32_t c : common_above(partners[a], partners[b], b)) {
        if (size == 3) {
          out.push_back(make_tuple({a, b, c}));
          continue;
        }
        const auto ab_c = common_above(partners[a], partners[b], c);
        for (const std::uint32_t d : common_above(ab_c, partners[c], c)) out.push_back(make_tuple({a, b, c, d}));
      }
    }
  }
  return out;
}

std::vector<Nat> check_pair_nonextension(const Nat& b, const Nat& a_max) {
  if (b < 2) throw DomainError("check_pair_nonextension: b must be >= 2");
  std::vector<Nat> out;
  for (Nat a = 1; a <= a_max; ++a)
    if (a != b && is_perfect_square(a * b + 1)) out.push_back(a);
  return out;
}

}  // namespace dq
