#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dq/alpha.hpp"
#include "dq/interval.hpp"
#include "dq/nat.hpp"

namespace dq {

// Published per-case bounds d < 10^x with x = 67.859, 60.057, 56.528, 51.416.
Interval published_log10_d(CaseFamily family);
Interval published_d(CaseFamily family);

// Bound on d used for the range split of case (A): 7.228e67.
Interval split_d_bound();

// Largest k with primorial(k) <= b_max, certified. Throws CertificationError
// if b_max straddles a primorial.
unsigned omega_cap(const Interval& b_max);

struct Multiplier {
  std::string name;
  long value = 1;
  std::string provenance;
};

// Every combinatorial factor entering the counts. Defaults reproduce the
// published products; each one can be changed to test sensitivity.
struct CountMultipliers {
  Multiplier a_triples{"a.triples", 3, "choices of the triple inside the quintuple"};
  Multiplier a_extensions{"a.extensions", 4, "extensions of a pair to a quintuple, single range"};
  Multiplier a_split_extensions{"a.split_extensions", 2, "extensions per split range (half-sum doubled)"};
  Multiplier b_extensions{"b.extensions", 4, "ways of extending a quadruple to a quintuple"};
  Multiplier c_triple_factor{"c.triple_factor", 8, "triple-count multiplier for a > eta"};
  Multiplier c_fifth{"c.fifth", 5, "fifth-element multiplier"};
  Multiplier c_extensions{"c.extensions", 4, "ways of extending a quadruple to a quintuple"};
  Multiplier c_pairs{"c.pairs", 4, "pair multiplier for a <= eta"};
  Multiplier d_doubles{"d.doubles", 2, "doubles {a,b} per b counted by 2^w(b)"};
  Multiplier d_extensions{"d.extensions", 4, "extensions of a double to a quintuple (reconstructed)"};

  std::vector<const Multiplier*> all() const;
  // Updates the multiplier with the given name; false if no such name.
  bool set(const std::string& name, long value);
};

struct CountTerm {
  std::string label;
  Interval value;
  std::string factors;  // e.g. "3*2*2^15"
};

struct CountReport {
  std::string case_tag;
  Interval radius;  // R_A, R_B, N_3b or R_D
  unsigned omega_cap = 0;
  Interval subtotal;
  std::vector<CountTerm> detail;
};

struct CaseAOptions {
  Interval d_bound = published_d(CaseFamily::A);
  // Bound on d used to place the split thresholds.
  Interval split_d = split_d_bound();
  // m_1..m_k; defaults to the published values.
  std::vector<Interval> m_values;
  // The swap enumeration excludes w(b) = 23 and lowers the cap by one.
  bool prime_swap = true;
  CountMultipliers multipliers;
};

// Published m_1..m_8: 177, 499686, 1.7e9, 6.4e12, 2.9e16, 1.4e20, 7.8e23, 4.8e27.
std::vector<Interval> published_m_values();

struct CaseACount {
  Interval radius;           // R_A = (d/16)^(1/4)
  Interval b_max;            // (d/20)^(1/2)
  unsigned omega_cap = 0;    // from b_max
  Interval doubles;          // (1/2) sum d_R(r^2 - 1) bound at N = H = R_A
  Interval unrefined;        // 3 * 4 * 2^(omega_cap + 1) * doubles
  Interval unrefined_swapped;  // same with omega_cap - 1
  CountReport refined;       // split sum; detail has one term per range
};

CaseACount count_case_A(const CaseAOptions& options = {});

struct CaseBCount {
  Interval radius;   // R_B = (d/16)^(1/3)
  Interval doubles;  // (1/2) dH bound at N = H = R_B
  CountReport report;
};

CaseBCount count_case_B(const Interval& d_bound = published_d(CaseFamily::B), const CountMultipliers& m = {});

struct CaseCCount {
  Interval eta;
  Interval N3a;       // (d/(4 eta))^(2/5)
  Interval N3b;       // (1 + (eta^3 d^2/16)^(1/5))^(1/2)
  Interval b_max;     // (d/4)^(2/5)
  unsigned omega_cap = 0;
  Interval branch_a;  // N3a/6 (log N3a + 2)^3 * 8 * 5 * 4
  Interval branch_b;  // 4 * 2^omega_cap * 5 * 4 * dH bound at N = N3b, H = eta
  CountReport report;  // subtotal = max of the branches
};

CaseCCount count_case_C(const Interval& eta, const Interval& d_bound = published_d(CaseFamily::C),
                        const CountMultipliers& m = {});

// Golden-section search over log eta (40 iterations) for the smallest
// max(branch_a, branch_b), then re-evaluated at the returned eta.
CaseCCount optimize_eta(const Interval& d_bound = published_d(CaseFamily::C), const CountMultipliers& m = {});

struct CaseDCount {
  Interval radius;   // R_D = (4d/9)^(1/3)
  Interval doubles;  // 2 * E bound at R_D
  CountReport report;
};

CaseDCount count_case_D(const Interval& d_bound = published_d(CaseFamily::D), const CountMultipliers& m = {});

struct SplitThreshold {
  unsigned omega = 0;   // w: b in the range has at most w prime factors
  Interval supremum;    // (2 primorial(w+1) / d^(1/4))^2
  Nat exact_floor;      // largest admissible integer m
  Interval two_sig;     // exact_floor rounded down to 2 significant figures
};

// For each w, the largest m with primorial(w+1) > d^(1/4) m^(1/2) / 2.
std::vector<SplitThreshold> m_split_thresholds(const Interval& d_bound, const std::vector<unsigned>& omega_targets);

struct TotalCount {
  CountReport a, b, c, d;
  Interval total;
};

struct TotalOptions {
  CaseAOptions a;
  std::optional<Interval> eta;  // fixed eta instead of the optimum
};

TotalCount total_count(const TotalOptions& options = {});

}  // namespace dq
