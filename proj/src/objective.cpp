#include "ec3/objective.hpp"

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "ec3/errors.hpp"

namespace ec3 {

void ObjectiveParams::validate() const {
  if (!(alpha > 0.0) || alpha > 1.0)
    throw ValidationError("params: alpha must lie in (0, 1]");
  if (beta < 0.0 || beta > 1.0 || gamma < 0.0 || gamma > 1.0 || delta < 0.0 || delta > 1.0)
    throw ValidationError("params: beta, gamma, delta must lie in [0, 1]");
  const double sum = alpha + beta + gamma + delta;
  if (std::abs(sum - 1.0) > 1e-9)
    throw ValidationError("params: weights sum to " + std::to_string(sum) +
                          ", expected 1");
}

namespace {

double squared_distance(const double* a, const double* b, std::size_t len) {
  double s = 0.0;
  for (std::size_t c = 0; c < len; ++c) {
    const double d = a[c] - b[c];
    s += d * d;
  }
  return s;
}

void check_shapes(const Matrix& objects, const Matrix& groups,
                  const Matrix& group_affinity, const Matrix& object_affinity,
                  const Matrix& object_votes, const Matrix& group_votes) {
  const std::size_t n = objects.rows(), g = groups.rows(), l = objects.cols();
  if (groups.cols() != l || object_votes.cols() != l || group_votes.cols() != l)
    throw ValidationError("objective: class-count mismatch");
  if (group_affinity.rows() != n || group_affinity.cols() != g)
    throw ValidationError("objective: group affinity shape mismatch");
  if (object_affinity.rows() != n || object_affinity.cols() != n)
    throw ValidationError("objective: object affinity shape mismatch");
  if (object_votes.rows() != n || group_votes.rows() != g)
    throw ValidationError("objective: vote matrix shape mismatch");
}

}  // namespace

ObjectiveTerms eval_components(const Matrix& objects, const Matrix& groups,
                               const Matrix& group_affinity,
                               const Matrix& object_affinity,
                               const Matrix& object_votes, const Matrix& group_votes) {
  check_shapes(objects, groups, group_affinity, object_affinity, object_votes,
               group_votes);
  const std::int64_t n = static_cast<std::int64_t>(objects.rows());
  const std::size_t g = groups.rows();
  const std::size_t l = objects.cols();

  ObjectiveTerms terms;

  std::vector<double> partial(objects.rows(), 0.0);
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < n; ++i) {
    const std::size_t ii = static_cast<std::size_t>(i);
    double s = 0.0;
    for (std::size_t j = 0; j < g; ++j) {
      const double w = group_affinity(ii, j);
      if (w != 0.0) s += w * squared_distance(objects.row(ii), groups.row(j), l);
    }
    partial[ii] = s;
  }
  for (double p : partial) terms.group_coherence += p;

#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < n; ++i) {
    const std::size_t ii = static_cast<std::size_t>(i);
    double s = 0.0;
    for (std::size_t j = 0; j < objects.rows(); ++j) {
      const double w = object_affinity(ii, j);
      if (w != 0.0) s += w * squared_distance(objects.row(ii), objects.row(j), l);
    }
    partial[ii] = s;
  }
  terms.smoothness = 0.0;
  for (double p : partial) terms.smoothness += p;

  for (std::size_t i = 0; i < objects.rows(); ++i)
    terms.object_consensus += squared_distance(objects.row(i), object_votes.row(i), l);
  for (std::size_t j = 0; j < g; ++j)
    terms.group_consensus += squared_distance(groups.row(j), group_votes.row(j), l);

  return terms;
}

double eval_objective(const Matrix& objects, const Matrix& groups,
                      const Matrix& group_affinity, const Matrix& object_affinity,
                      const Matrix& object_votes, const Matrix& group_votes,
                      const ObjectiveParams& params) {
  params.validate();
  return eval_components(objects, groups, group_affinity, object_affinity,
                         object_votes, group_votes)
      .weighted(params);
}

Matrix laplacian(const Matrix& object_affinity) {
  const std::size_t n = object_affinity.rows();
  if (n != object_affinity.cols())
    throw ValidationError("laplacian: affinity matrix is not square");
  Matrix l(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      l(i, j) = (i == j ? 1.0 : 0.0) - object_affinity(i, j);
  return l;
}

}  // namespace ec3
