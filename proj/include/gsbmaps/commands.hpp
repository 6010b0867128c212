#pragma once

// Report builders shared by the command-line tool and the Python module.
// Each builder returns a machine-readable JSON object (key order fixed,
// witnesses chosen deterministically) and the equivalent text report.

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "gsbmaps/instance.hpp"

namespace gsb {

struct Report {
  nlohmann::ordered_json json;
  std::string text;
};

Report index_report(const Instance& inst, const std::vector<std::string>& names);
Report exponent_report(const Instance& inst, const std::vector<std::string>& names);
Report subgroup_report(const Instance& inst, const std::string& generators,
                       const std::optional<std::string>& compare);
Report reduced_index_report(const Instance& inst, const std::string& target,
                            const std::string& base);
Report rational_map_report(const Instance& inst, const std::string& source,
                           const std::string& target);
Report equivalent_report(const Instance& inst, const std::string& left, const std::string& right);
Report motive_iso_report(const Instance& inst, const std::string& left, const std::string& right);
Report compare_families_report(const Instance& inst, const std::string& left,
                               const std::string& right);

struct Verification {
  Report report;
  bool all_pass;
};

/// Re-derives every claim about the two bundled example instances.
Verification verify_examples();

}  // namespace gsb
