#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "baskakov/exact.hpp"
#include "baskakov/experiments.hpp"

// Machine-readable emission of reports: CSV (RFC-4180 quoting, one row per
// case, config echoed as leading '# key=value' comment lines) and JSON (an
// object with "config" and "reports" members).  Formatting is deterministic:
// identical inputs produce byte-identical output.

namespace baskakov {

struct RunEcho {
  std::vector<std::pair<std::string, std::string>> entries;
  void add(const std::string& key, const std::string& value) {
    entries.emplace_back(key, value);
  }
};

std::string format_double(double v);   // shortest round-trip-safe decimal
std::string csv_field(const std::string& raw);

void write_convergence_csv(std::ostream& os, const std::vector<ConvergenceReport>& reps,
                           const RunEcho& echo);
void write_inequality_csv(std::ostream& os, const std::vector<InequalityReport>& reps,
                          const RunEcho& echo);
void write_sum_checks_csv(std::ostream& os, const std::vector<exact::SumCheck>& checks,
                          const RunEcho& echo);

void write_convergence_json(std::ostream& os, const std::vector<ConvergenceReport>& reps,
                            const RunEcho& echo);
void write_inequality_json(std::ostream& os, const std::vector<InequalityReport>& reps,
                           const RunEcho& echo);
void write_sum_checks_json(std::ostream& os, const std::vector<exact::SumCheck>& checks,
                           const RunEcho& echo);

}  // namespace baskakov
