#pragma once

#include <string>
#include <vector>

#include "dq/config.hpp"
#include "dq/interval.hpp"

namespace dq {

enum class CheckStatus { Pass, Fail, Flag };
std::string to_string(CheckStatus s);

// One certified constant: the computed enclosure, the published target and
// the rule used to compare them.
struct ConstantCheck {
  std::string stage;      // alpha, dbound, prime-swap, counts
  std::string name;       // stable identifier, e.g. "counts.B"
  Interval value;
  std::string target;     // published value as printed, or "" for structural checks
  std::string reference;  // where the target comes from
  std::string tolerance;
  CheckStatus status = CheckStatus::Pass;
  std::string note;
};

// Largest published figure comparison: value rounded up to the significant
// figures of `target` lies within `rel` of it.
bool matches_published(const Interval& value, const std::string& target, double rel = 0.01);

// Runs the pipeline alpha -> dbound -> prime-swap -> counts and returns every
// check in that order. Flagged checks record a known discrepancy without
// failing.
std::vector<ConstantCheck> certify_all(const RunConfig& config);

}  // namespace dq
