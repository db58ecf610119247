#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace dq {

// Arbitrary-precision non-negative integers. Negative values never arise in
// the domain code; functions taking a Nat reject them explicitly.
using Nat = mpz_class;
using Rational = mpq_class;

inline Nat nat_from_u64(std::uint64_t v) {
  Nat n;
  mpz_import(n.get_mpz_t(), 1, 1, sizeof(v), 0, 0, &v);
  return n;
}

inline bool fits_u64(const Nat& n) { return sgn(n) >= 0 && mpz_sizeinbase(n.get_mpz_t(), 2) <= 64; }

inline std::uint64_t to_u64(const Nat& n) {
  std::uint64_t v = 0;
  mpz_export(&v, nullptr, 1, sizeof(v), 0, 0, n.get_mpz_t());
  return v;
}

inline std::string to_string(const Nat& n) { return n.get_str(); }

}  // namespace dq
