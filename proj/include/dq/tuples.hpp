#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dq/nat.hpp"

namespace dq {

// Strictly increasing list of 2 to 5 positive integers.
class Tuple {
 public:
  explicit Tuple(std::vector<Nat> elements);  // throws DomainError unless strictly increasing, length 2..5

  const std::vector<Nat>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  const Nat& operator[](std::size_t i) const { return elements_[i]; }

  // floor(sqrt(e_i e_j + 1)); r, s, t of a triple are root(0,1), root(0,2), root(1,2).
  Nat root(std::size_t i, std::size_t j) const;

  std::string str() const;

  friend bool operator==(const Tuple&, const Tuple&) = default;
  friend auto operator<=>(const Tuple& a, const Tuple& b) {
    return std::lexicographical_compare_three_way(a.elements_.begin(), a.elements_.end(), b.elements_.begin(),
                                                  b.elements_.end(), [](const Nat& x, const Nat& y) {
                                                    const int c = cmp(x, y);
                                                    return c < 0 ? std::strong_ordering::less
                                                                 : (c > 0 ? std::strong_ordering::greater
                                                                          : std::strong_ordering::equal);
                                                  });
  }

 private:
  std::vector<Nat> elements_;
};

enum class TripleType { A, B, C, D, None };

std::string to_string(TripleType t);

bool is_diophantine(const Tuple& t);

// c = a + b + 2 sqrt(ab + 1); requires ab + 1 to be a square.
Nat regular_third(const Nat& a, const Nat& b);

// d+ = a + b + c + 2abc + 2rst for a Diophantine triple a < b < c. The result
// is re-checked with is_diophantine before it is returned.
Nat regular_fourth(const Nat& a, const Nat& b, const Nat& c);

// Size classification of a triple a < b < c inside a quintuple;
// the b^(3/2) comparisons are exact (c^2 against b^3).
TripleType classify_triple(const Nat& a, const Nat& b, const Nat& c);

// All Diophantine tuples of the given size (2, 3 or 4) with largest element
// <= limit, in lexicographic order. Guards: limit <= 10^6 for pairs and
// triples, <= 10^5 for quadruples.
std::vector<Tuple> search_tuples(std::uint64_t limit, unsigned size);

// Every a <= a_max (a != b) with ab + 1 a perfect square, by exhaustive scan.
std::vector<Nat> check_pair_nonextension(const Nat& b, const Nat& a_max);

}  // namespace dq
