#include "ec3/bistochastic.hpp"

#include <cmath>
#include <cstdint>
#include <string>

#include "ec3/errors.hpp"
#include "ec3/kernels.hpp"

namespace ec3 {

namespace {

void require_positive_row_sums(const std::vector<double>& sums) {
  for (std::size_t i = 0; i < sums.size(); ++i)
    if (sums[i] <= 0.0)
      throw NumericalError("scaling: row " + std::to_string(i + 1) + " sums to zero");
}

}  // namespace

ScalingResult kl_bistochastic_square(const Matrix& a, double tol, std::size_t max_sweeps) {
  const std::size_t n = a.rows();
  if (n != a.cols()) throw ValidationError("square scaling: matrix is not square");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (a(i, j) != a(j, i))
        throw ValidationError("square scaling: input is not symmetric at (" +
                              std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (a(i, j) < 0.0) throw ValidationError("square scaling: negative entry");

  ScalingResult result;
  result.matrix = a;
  result.row_scale.assign(n, 1.0);

  Matrix previous;
  for (std::size_t sweep = 0; sweep < max_sweeps; ++sweep) {
    previous = result.matrix;

    std::vector<double> sums = kernels::row_sums(result.matrix);
    require_positive_row_sums(sums);
    std::vector<double> inverse(n);
    for (std::size_t i = 0; i < n; ++i) inverse[i] = 1.0 / sums[i];
    kernels::scale_rows(result.matrix, inverse);
    kernels::geometric_symmetrize(result.matrix);

    // For a symmetric iterate the two steps above amount to a congruence
    // with diag(1/sqrt(sums)), which is what the composed scale records.
    for (std::size_t i = 0; i < n; ++i) result.row_scale[i] /= std::sqrt(sums[i]);

    result.residuals.push_back(kernels::frobenius_distance(result.matrix, previous));
    if (result.residuals.back() <= tol) {
      result.converged = true;
      break;
    }
  }
  result.col_scale = result.row_scale;
  return result;
}

ScalingResult kl_bistochastic_rectangular(const Matrix& a, double tol,
                                          std::size_t max_sweeps) {
  const std::size_t n = a.rows();
  const std::size_t g = a.cols();
  if (n == 0 || g == 0) throw ValidationError("rectangular scaling: empty matrix");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < g; ++j)
      if (a(i, j) < 0.0) throw ValidationError("rectangular scaling: negative entry");

  const double column_target = static_cast<double>(n) / static_cast<double>(g);

  ScalingResult result;
  result.matrix = a;
  result.row_scale.assign(n, 1.0);
  result.col_scale.assign(g, 1.0);

  Matrix previous;
  for (std::size_t sweep = 0; sweep < max_sweeps; ++sweep) {
    previous = result.matrix;

    std::vector<double> rows = kernels::row_sums(result.matrix);
    require_positive_row_sums(rows);
    std::vector<double> row_factor(n);
    for (std::size_t i = 0; i < n; ++i) row_factor[i] = 1.0 / rows[i];
    kernels::scale_rows(result.matrix, row_factor);
    for (std::size_t i = 0; i < n; ++i) result.row_scale[i] *= row_factor[i];

    std::vector<double> cols = kernels::col_sums(result.matrix);
    std::vector<double> col_factor(g);
    for (std::size_t j = 0; j < g; ++j) {
      if (cols[j] <= 0.0)
        throw NumericalError("scaling: column " + std::to_string(j + 1) + " sums to zero");
      col_factor[j] = column_target / cols[j];
    }
    kernels::scale_cols(result.matrix, col_factor);
    for (std::size_t j = 0; j < g; ++j) result.col_scale[j] *= col_factor[j];

    result.residuals.push_back(kernels::frobenius_distance(result.matrix, previous));
    if (result.residuals.back() <= tol) {
      result.converged = true;
      break;
    }
  }
  return result;
}

Matrix column_normalize(const Matrix& membership) {
  std::vector<double> sums = kernels::col_sums(membership);
  for (std::size_t j = 0; j < sums.size(); ++j)
    if (sums[j] <= 0.0)
      throw NumericalError("column_normalize: column " + std::to_string(j + 1) +
                           " sums to zero");
  Matrix normalized = membership;
  std::vector<double> inverse(sums.size());
  for (std::size_t j = 0; j < sums.size(); ++j) inverse[j] = 1.0 / sums[j];
  kernels::scale_cols(normalized, inverse);
  return normalized;
}

FactoredCooccurrence kl_bistochastic_cooccurrence(
    const std::vector<std::vector<std::size_t>>& object_memberships,
    std::size_t num_groups, double tol, std::size_t max_sweeps) {
  const std::size_t n = object_memberships.size();
  if (n == 0) throw ValidationError("factored scaling: no objects");

  FactoredCooccurrence result;
  result.scale.assign(n, 1.0);

  // row sums of diag(x) * C * diag(x) where C = membership * membership^T
  std::vector<double> group_mass(num_groups);
  auto compute_row_sums = [&](const std::vector<double>& x, std::vector<double>& out) {
    std::fill(group_mass.begin(), group_mass.end(), 0.0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t g : object_memberships[i]) group_mass[g] += x[i];
    out.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      double s = 0.0;
      for (std::size_t g : object_memberships[i]) s += group_mass[g];
      out[i] = x[i] * s;
    }
  };

  // sum_{i,j} C_ij^2 x_i x_j, via C_ij^2 = sum over group pairs (g, h) of
  // [i in g and h][j in g and h]: accumulate per-pair masses and square.
  std::vector<double> pair_mass(num_groups * num_groups);
  auto quadratic_form = [&](const std::vector<double>& x) {
    std::fill(pair_mass.begin(), pair_mass.end(), 0.0);
    for (std::size_t i = 0; i < n; ++i) {
      const auto& mem = object_memberships[i];
      for (std::size_t g : mem)
        for (std::size_t h : mem) pair_mass[g * num_groups + h] += x[i];
    }
    double total = 0.0;
    for (double v : pair_mass) total += v * v;
    return total;
  };

  std::vector<double> sums, next(n), sq_prev(n), sq_next(n), cross(n);
  for (std::size_t sweep = 0; sweep < max_sweeps; ++sweep) {
    compute_row_sums(result.scale, sums);
    require_positive_row_sums(sums);
    for (std::size_t i = 0; i < n; ++i) next[i] = result.scale[i] / std::sqrt(sums[i]);

    for (std::size_t i = 0; i < n; ++i) {
      sq_prev[i] = result.scale[i] * result.scale[i];
      sq_next[i] = next[i] * next[i];
      cross[i] = result.scale[i] * next[i];
    }
    const double gap = quadratic_form(sq_next) - 2.0 * quadratic_form(cross) +
                       quadratic_form(sq_prev);
    result.residuals.push_back(std::sqrt(std::max(gap, 0.0)));

    result.scale = next;
    if (result.residuals.back() <= tol) {
      result.converged = true;
      break;
    }
  }

  compute_row_sums(result.scale, result.row_sums);
  result.diagonal.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double methods = static_cast<double>(object_memberships[i].size());
    result.diagonal[i] = result.scale[i] * result.scale[i] * methods;
  }
  return result;
}

}  // namespace ec3
