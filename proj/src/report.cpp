#include "ec3/report.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "ec3/errors.hpp"
#include "ec3/format.hpp"

namespace ec3 {

namespace {

// Interface numbers carry 12 significant digits; rounding before
// serializing keeps reruns byte-comparable.
double sig12(double value) {
  if (!std::isfinite(value)) return value;
  return std::stod(to_sig(value, 12));
}

nlohmann::json round_numbers(const nlohmann::json& node) {
  if (node.is_number_float()) return sig12(node.get<double>());
  if (node.is_object()) {
    nlohmann::json out = nlohmann::json::object();
    for (const auto& [key, value] : node.items()) out[key] = round_numbers(value);
    return out;
  }
  if (node.is_array()) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& value : node) out.push_back(round_numbers(value));
    return out;
  }
  return node;
}

}  // namespace

nlohmann::json ExperimentReport::to_json() const {
  nlohmann::json out;
  out["schema"] = "ec3/experiment-report/v1";
  out["kind"] = kind;
  out["config"] = round_numbers(config);
  out["columns"] = columns;
  nlohmann::json row_array = nlohmann::json::array();
  for (const auto& row : rows) {
    nlohmann::json r = nlohmann::json::array();
    for (double v : row) r.push_back(sig12(v));
    row_array.push_back(std::move(r));
  }
  out["rows"] = std::move(row_array);
  out["aggregates"] = round_numbers(aggregates);
  out["wall_seconds"] = sig12(wall_seconds);
  return out;
}

void write_report_json(const ExperimentReport& report, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path);
  out << report.to_json().dump(2) << '\n';
}

void write_report_csv(const ExperimentReport& report, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path);
  for (std::size_t c = 0; c < report.columns.size(); ++c)
    out << (c ? "," : "") << report.columns[c];
  out << '\n';
  for (const auto& row : report.rows) {
    for (std::size_t c = 0; c < row.size(); ++c)
      out << (c ? "," : "") << to_sig(row[c], 12);
    out << '\n';
  }
}

std::string render_aggregates(const ExperimentReport& report) {
  std::ostringstream out;
  out << "experiment: " << report.kind << "\n";
  out << report.aggregates.dump(2) << "\n";
  return out.str();
}

MeanSd mean_sd(const std::vector<double>& values) {
  MeanSd result;
  if (values.empty()) return result;
  for (double v : values) result.mean += v;
  result.mean /= static_cast<double>(values.size());
  if (values.size() > 1) {
    double ss = 0.0;
    for (double v : values) ss += (v - result.mean) * (v - result.mean);
    result.sd = std::sqrt(ss / static_cast<double>(values.size() - 1));
  }
  return result;
}

LinearFit fit_linear(const std::vector<double>& x, const std::vector<double>& y) {
  LinearFit fit;
  const std::size_t n = x.size();
  if (n < 2 || y.size() != n) throw ValidationError("fit_linear: need two points");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < n; ++i) {
    sx += x[i];
    sy += y[i];
    sxx += x[i] * x[i];
    sxy += x[i] * y[i];
  }
  const double dn = static_cast<double>(n);
  const double denom = dn * sxx - sx * sx;
  fit.slope = (dn * sxy - sx * sy) / denom;
  fit.intercept = (sy - fit.slope * sx) / dn;

  const double mean_y = sy / dn;
  double ss_res = 0, ss_tot = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const double predicted = fit.intercept + fit.slope * x[i];
    ss_res += (y[i] - predicted) * (y[i] - predicted);
    ss_tot += (y[i] - mean_y) * (y[i] - mean_y);
  }
  fit.r2 = ss_tot > 0.0 ? 1.0 - ss_res / ss_tot : 1.0;
  return fit;
}

QuadraticFit fit_quadratic(const std::vector<double>& x, const std::vector<double>& y) {
  QuadraticFit fit;
  const std::size_t n = x.size();
  if (n < 3 || y.size() != n) throw ValidationError("fit_quadratic: need three points");

  // normal equations for [1, x, x^2]
  double m[3][3] = {};
  double b[3] = {};
  for (std::size_t i = 0; i < n; ++i) {
    const double p[3] = {1.0, x[i], x[i] * x[i]};
    for (int r = 0; r < 3; ++r) {
      b[r] += p[r] * y[i];
      for (int c = 0; c < 3; ++c) m[r][c] += p[r] * p[c];
    }
  }
  // gaussian elimination with partial pivoting
  int perm[3] = {0, 1, 2};
  for (int col = 0; col < 3; ++col) {
    int pivot = col;
    for (int r = col + 1; r < 3; ++r)
      if (std::abs(m[perm[r]][col]) > std::abs(m[perm[pivot]][col])) pivot = r;
    std::swap(perm[col], perm[pivot]);
    for (int r = col + 1; r < 3; ++r) {
      const double f = m[perm[r]][col] / m[perm[col]][col];
      for (int c = col; c < 3; ++c) m[perm[r]][c] -= f * m[perm[col]][c];
      b[perm[r]] -= f * b[perm[col]];
    }
  }
  double coef[3];
  for (int col = 2; col >= 0; --col) {
    double v = b[perm[col]];
    for (int c = col + 1; c < 3; ++c) v -= m[perm[col]][c] * coef[c];
    coef[col] = v / m[perm[col]][col];
  }
  fit.c0 = coef[0];
  fit.c1 = coef[1];
  fit.c2 = coef[2];

  double sy = 0;
  for (double v : y) sy += v;
  const double mean_y = sy / static_cast<double>(n);
  double ss_res = 0, ss_tot = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const double predicted = fit.c0 + fit.c1 * x[i] + fit.c2 * x[i] * x[i];
    ss_res += (y[i] - predicted) * (y[i] - predicted);
    ss_tot += (y[i] - mean_y) * (y[i] - mean_y);
  }
  fit.r2 = ss_tot > 0.0 ? 1.0 - ss_res / ss_tot : 1.0;
  return fit;
}

}  // namespace ec3
