#include "dq/config.hpp"

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

#include <algorithm>
#include <fstream>
#include <sstream>

#include "dq/errors.hpp"
#include "dq/expr.hpp"

namespace dq {
namespace {

namespace pt = boost::property_tree;

bool same(const Interval& a, const Interval& b) { return a.str(30) == b.str(30); }

std::vector<Interval> parse_list(const std::string& text) {
  std::vector<Interval> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(), ::isspace), item.end());
    if (!item.empty()) out.push_back(evaluate_expression(item));
  }
  return out;
}

void apply_row(RunConfig& cfg, const std::string& tag, const pt::ptree& section) {
  auto it = std::find_if(cfg.rows.begin(), cfg.rows.end(), [&](const CaseParams& r) { return r.tag == tag; });
  const bool fresh = it == cfg.rows.end();
  CaseParams row;
  if (!fresh) row = *it;
  row.tag = tag;
  for (const auto& [key, node] : section) {
    const std::string value = node.get_value<std::string>();
    const std::string where = "case." + tag + "." + key;
    bool changed = false;
    try {
      if (key == "family") {
        const CaseFamily f = parse_case_family(value);
        changed = fresh || f != row.family;
        row.family = f;
      } else if (key == "A0" || key == "B0") {
        const Nat n(value);
        Nat& slot = key == "A0" ? row.A0 : row.B0;
        changed = fresh || n != slot;
        slot = n;
      } else if (key == "C0" || key == "rho" || key == "beta" || key == "alpha") {
        const Interval v = evaluate_expression(value);
        Interval& slot = key == "C0" ? row.C0 : key == "rho" ? row.rho : key == "beta" ? row.beta : row.stated_alpha;
        changed = fresh || !same(v, slot);
        slot = v;
      } else if (key == "tau") {
        Rational t(value);
        t.canonicalize();
        changed = fresh || t != row.tau;
        row.tau = t;
      } else {
        throw DomainError("unknown key " + where);
      }
    } catch (const std::invalid_argument&) {
      throw DomainError("malformed value for " + where + ": '" + value + "'");
    }
    if (changed) cfg.overrides.push_back(where + "=" + value);
  }
  validate(row);
  if (fresh) {
    cfg.rows.push_back(std::move(row));
  } else {
    *it = std::move(row);
  }
}

}  // namespace

RunConfig load_config(std::istream& in, RunConfig cfg) {
  pt::ptree tree;
  try {
    pt::read_ini(in, tree);
  } catch (const pt::ini_parser_error& e) {
    throw DomainError(std::string("config: ") + e.what());
  }
  for (const auto& [name, section] : tree) {
    if (name == "run") {
      for (const auto& [key, node] : section) {
        const std::string value = node.get_value<std::string>();
        if (key == "seed_log10_c1") {
          const double seed = std::stod(value);
          if (seed != cfg.seed_log10_c1) cfg.overrides.push_back("run.seed_log10_c1=" + value);
          cfg.seed_log10_c1 = seed;
        } else if (key == "precision") {
          const int bits = std::stoi(value);
          if (bits < 64) throw DomainError("config: precision must be >= 64 bits");
          if (bits != cfg.precision) cfg.overrides.push_back("run.precision=" + value);
          cfg.precision = bits;
        } else if (key == "eta") {
          cfg.eta = evaluate_expression(value);
          cfg.overrides.push_back("run.eta=" + value);
        } else if (key == "m_values") {
          cfg.m_values = parse_list(value);
          cfg.overrides.push_back("run.m_values=" + value);
        } else {
          throw DomainError("unknown key run." + key);
        }
      }
    } else if (name == "multipliers") {
      for (const auto& [key, node] : section) {
        const long value = node.get_value<long>();
        const auto all = cfg.multipliers.all();
        const auto hit = std::find_if(all.begin(), all.end(), [&](const Multiplier* m) { return m->name == key; });
        if (hit == all.end()) throw DomainError("unknown multiplier " + key);
        if ((*hit)->value != value) cfg.overrides.push_back("multipliers." + key + "=" + std::to_string(value));
        cfg.multipliers.set(key, value);
      }
    } else if (name.rfind("case.", 0) == 0) {
      apply_row(cfg, name.substr(5), section);
    } else {
      throw DomainError("unknown config section [" + name + "]");
    }
  }
  return cfg;
}

RunConfig load_config_file(const std::string& path, RunConfig base) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open config file " + path);
  return load_config(in, std::move(base));
}

}  // namespace dq
