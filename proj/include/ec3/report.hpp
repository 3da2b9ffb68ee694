#ifndef EC3_REPORT_HPP
#define EC3_REPORT_HPP

#include <string>
#include <vector>

#include <json.hpp>

namespace ec3 {

// Uniform result table for every experiment kind: a configuration echo
// that reproduces the run, per-run rows, and derived aggregates.
struct ExperimentReport {
  std::string kind;
  nlohmann::json config;
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
  nlohmann::json aggregates;
  double wall_seconds = 0.0;

  nlohmann::json to_json() const;
};

void write_report_json(const ExperimentReport& report, const std::string& path);
void write_report_csv(const ExperimentReport& report, const std::string& path);

// Aggregate table rendered for the terminal.
std::string render_aggregates(const ExperimentReport& report);

// mean/sd helper used across the harness
struct MeanSd {
  double mean = 0.0;
  double sd = 0.0;
};
MeanSd mean_sd(const std::vector<double>& values);

// least-squares fits behind the scaling analysis
struct LinearFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r2 = 0.0;
};
LinearFit fit_linear(const std::vector<double>& x, const std::vector<double>& y);

struct QuadraticFit {
  double c2 = 0.0;
  double c1 = 0.0;
  double c0 = 0.0;
  double r2 = 0.0;
};
QuadraticFit fit_quadratic(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace ec3

#endif
