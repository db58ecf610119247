#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "dq/alpha.hpp"
#include "dq/counting.hpp"

namespace dq {

struct RunConfig {
  std::vector<CaseParams> rows = parameter_table();
  double seed_log10_c1 = 72.188;
  int precision = 128;
  std::optional<Interval> eta;
  std::vector<Interval> m_values;  // empty: published values
  CountMultipliers multipliers;
  // "key=value" for every setting that differs from the defaults, in the
  // order it was applied.
  std::vector<std::string> overrides;
};

// Reads an INI file with [run], [multipliers] and [case.<tag>] sections.
// Rows in the file replace the built-in rows of the same tag; unknown keys
// are rejected. Throws DomainError with the offending key.
RunConfig load_config(std::istream& in, RunConfig base = {});
RunConfig load_config_file(const std::string& path, RunConfig base = {});

}  // namespace dq
