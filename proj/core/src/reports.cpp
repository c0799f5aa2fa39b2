#include "baskakov/reports.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

#include "json.hpp"

namespace baskakov {

std::string format_double(double v) {
  if (std::isnan(v)) return "";
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string csv_field(const std::string& raw) {
  if (raw.find_first_of(",\"\n\r") == std::string::npos) return raw;
  std::string out = "\"";
  for (char c : raw) {
    if (c == '"') out += "\"\"";
    else out += c;
  }
  out += '"';
  return out;
}

namespace {

void write_echo(std::ostream& os, const RunEcho& echo) {
  for (const auto& [k, v] : echo.entries) os << "# " << k << "=" << v << "\n";
}

nlohmann::json echo_json(const RunEcho& echo) {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [k, v] : echo.entries) j[k] = v;
  return j;
}

std::string extra_field(const std::vector<std::pair<std::string, double>>& extra) {
  std::string s;
  for (const auto& [k, v] : extra) {
    if (!s.empty()) s += ';';
    s += k + "=" + format_double(v);
  }
  return s;
}

}  // namespace

void write_convergence_csv(std::ostream& os, const std::vector<ConvergenceReport>& reps,
                           const RunEcho& echo) {
  write_echo(os, echo);
  os << "function,operator,n,error,bound,err_channel,slope,window_xmax,window_points\n";
  for (const auto& r : reps) {
    for (const auto& row : r.rows) {
      os << csv_field(r.function_id) << ',' << operator_kind_name(r.kind) << ','
         << row.n << ',' << format_double(row.error) << ','
         << format_double(row.bound) << ',' << format_double(row.err_channel) << ','
         << format_double(r.slope) << ',' << format_double(r.window.x_max) << ','
         << r.window.grid_points << "\n";
    }
  }
}

void write_inequality_csv(std::ostream& os, const std::vector<InequalityReport>& reps,
                          const RunEcho& echo) {
  write_echo(os, echo);
  os << "check,function,n,ell,left,right,slack,err_channel,verdict,"
        "window_xmax,window_points,extra\n";
  for (const auto& r : reps) {
    os << csv_field(r.check_id) << ',' << csv_field(r.function_id) << ',' << r.n << ','
       << r.ell << ',' << format_double(r.left) << ',' << format_double(r.right) << ','
       << format_double(r.slack) << ',' << format_double(r.err_channel) << ','
       << verdict_name(r.verdict) << ',' << format_double(r.window.x_max) << ','
       << r.window.grid_points << ',' << csv_field(extra_field(r.extra)) << "\n";
  }
}

void write_sum_checks_csv(std::ostream& os, const std::vector<exact::SumCheck>& checks,
                          const RunEcho& echo) {
  write_echo(os, echo);
  os << "identity,n,x,parameter,computed,closed_form,abs_difference,tail_bound,"
        "verdict\n";
  for (const auto& c : checks) {
    os << exact::sum_identity_name(c.id) << ',' << c.n << ',' << format_double(c.x)
       << ',' << c.parameter << ',' << csv_field(c.computed) << ','
       << csv_field(c.closed_form) << ',' << format_double(c.abs_difference) << ','
       << format_double(c.tail_bound) << ',' << (c.pass ? "pass" : "fail") << "\n";
  }
}

namespace {

nlohmann::json to_json(const ConvergenceReport& r) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : r.rows) {
    rows.push_back({{"n", row.n},
                    {"error", row.error},
                    {"bound", std::isnan(row.bound) ? nlohmann::json() : nlohmann::json(row.bound)},
                    {"err_channel", row.err_channel}});
  }
  return {{"function", r.function_id},
          {"operator", operator_kind_name(r.kind)},
          {"rows", rows},
          {"slope", r.slope},
          {"window", {{"x_max", r.window.x_max}, {"points", r.window.grid_points}}}};
}

nlohmann::json to_json(const InequalityReport& r) {
  nlohmann::json extra = nlohmann::json::object();
  for (const auto& [k, v] : r.extra) extra[k] = v;
  return {{"check", r.check_id},
          {"function", r.function_id},
          {"n", r.n},
          {"ell", r.ell},
          {"left", r.left},
          {"right", r.right},
          {"slack", r.slack},
          {"err_channel", r.err_channel},
          {"verdict", verdict_name(r.verdict)},
          {"window", {{"x_max", r.window.x_max}, {"points", r.window.grid_points}}},
          {"extra", extra}};
}

nlohmann::json to_json(const exact::SumCheck& c) {
  return {{"identity", exact::sum_identity_name(c.id)},
          {"n", c.n},
          {"x", c.x},
          {"parameter", c.parameter},
          {"computed", c.computed},
          {"closed_form", c.closed_form},
          {"abs_difference", c.abs_difference},
          {"tail_bound", c.tail_bound},
          {"verdict", c.pass ? "pass" : "fail"}};
}

template <typename T>
void write_json_array(std::ostream& os, const std::vector<T>& reps, const RunEcho& echo) {
  nlohmann::json doc;
  doc["config"] = echo_json(echo);
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : reps) arr.push_back(to_json(r));
  doc["reports"] = arr;
  os << doc.dump(2) << "\n";
}

}  // namespace

void write_convergence_json(std::ostream& os, const std::vector<ConvergenceReport>& reps,
                            const RunEcho& echo) {
  write_json_array(os, reps, echo);
}

void write_inequality_json(std::ostream& os, const std::vector<InequalityReport>& reps,
                           const RunEcho& echo) {
  write_json_array(os, reps, echo);
}

void write_sum_checks_json(std::ostream& os, const std::vector<exact::SumCheck>& checks,
                           const RunEcho& echo) {
  write_json_array(os, checks, echo);
}

}  // namespace baskakov
