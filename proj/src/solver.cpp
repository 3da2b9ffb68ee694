#include "ec3/solver.hpp"

#include <cassert>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <random>
#include <string>

#include "ec3/errors.hpp"
#include "ec3/format.hpp"
#include "ec3/kernels.hpp"

namespace ec3 {

void SolverConfig::validate() const {
  params.validate();
  if (!(epsilon > 0.0)) throw ValidationError("solver: epsilon must be positive");
  if (max_iterations < 1) throw ValidationError("solver: need at least one iteration");
}

ClassDistributions init_distributions(std::size_t num_objects, std::size_t num_groups,
                                      std::size_t num_classes, std::uint64_t seed) {
  if (num_objects == 0 || num_groups == 0 || num_classes == 0)
    throw ValidationError("init: dimensions must be positive");
  std::mt19937_64 rng(seed);
  std::exponential_distribution<double> unit_exp(1.0);
  auto fill = [&](Matrix& m) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
      double sum = 0.0;
      double* row = m.row(i);
      for (std::size_t c = 0; c < m.cols(); ++c) {
        row[c] = unit_exp(rng);
        sum += row[c];
      }
      for (std::size_t c = 0; c < m.cols(); ++c) row[c] /= sum;
    }
  };
  ClassDistributions dist;
  dist.objects = Matrix(num_objects, num_classes);
  dist.groups = Matrix(num_groups, num_classes);
  fill(dist.objects);
  fill(dist.groups);
  return dist;
}

namespace {

#ifndef NDEBUG
bool row_stochastic(const Matrix& m, double tol) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    double sum = 0.0;
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (m(i, c) < 0.0) return false;
      sum += m(i, c);
    }
    if (std::abs(sum - 1.0) > tol) return false;
  }
  return true;
}
#endif

std::vector<double> object_denominators(const ObjectiveParams& p,
                                        const std::vector<double>& affinity_row_sums,
                                        const std::vector<double>& co_row_sums,
                                        const std::vector<double>& co_diagonal) {
  std::vector<double> denom(affinity_row_sums.size());
  for (std::size_t i = 0; i < denom.size(); ++i) {
    denom[i] = p.alpha * affinity_row_sums[i] +
               p.beta * (2.0 * co_row_sums[i] - co_diagonal[i]) + 2.0 * p.gamma;
    if (!(denom[i] > 0.0))
      throw NumericalError("object update: nonpositive denominator at row " +
                           std::to_string(i + 1));
  }
  return denom;
}

}  // namespace

Matrix update_groups(const Matrix& objects, const Matrix& group_affinity,
                     const Matrix& group_votes, const ObjectiveParams& params) {
  if (group_affinity.rows() != objects.rows())
    throw ValidationError("group update: affinity/object shape mismatch");
  if (group_votes.rows() != group_affinity.cols() || group_votes.cols() != objects.cols())
    throw ValidationError("group update: vote matrix shape mismatch");

  Matrix pooled;  // column j of affinity applied to the object rows
  kernels::matmul_transposed(group_affinity, objects, pooled);
  const std::vector<double> mass = kernels::col_sums(group_affinity);

  const std::size_t g = pooled.rows(), l = pooled.cols();
  Matrix groups(g, l);
  for (std::size_t j = 0; j < g; ++j) {
    const double denom = params.alpha * mass[j] + 2.0 * params.delta;
    if (!(denom > 0.0))
      throw NumericalError("group update: zero denominator at group " +
                           std::to_string(j + 1));
    for (std::size_t c = 0; c < l; ++c)
      groups(j, c) =
          (params.alpha * pooled(j, c) + 2.0 * params.delta * group_votes(j, c)) / denom;
  }
  assert(row_stochastic(groups, 1e-9));
  return groups;
}

Matrix update_objects(const Matrix& groups, const Matrix& objects_current,
                      const Matrix& group_affinity, const Matrix& object_affinity,
                      const Matrix& object_votes, const ObjectiveParams& params,
                      SweepOrder sweep) {
  const std::size_t n = objects_current.rows();
  const std::size_t l = objects_current.cols();
  if (group_affinity.rows() != n || group_affinity.cols() != groups.rows())
    throw ValidationError("object update: affinity shape mismatch");
  if (object_affinity.rows() != n || object_affinity.cols() != n)
    throw ValidationError("object update: co-occurrence affinity must be n x n");
  if (object_votes.rows() != n || object_votes.cols() != l || groups.cols() != l)
    throw ValidationError("object update: class-count mismatch");

  Matrix base;  // the part that ignores the object block
  kernels::matmul(group_affinity, groups, base);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t c = 0; c < l; ++c)
      base(i, c) = params.alpha * base(i, c) + 2.0 * params.gamma * object_votes(i, c);

  const std::vector<double> affinity_rows = kernels::row_sums(group_affinity);
  std::vector<double> co_rows = kernels::row_sums(object_affinity);
  std::vector<double> co_diag(n);
  for (std::size_t i = 0; i < n; ++i) co_diag[i] = object_affinity(i, i);
  const std::vector<double> denom =
      object_denominators(params, affinity_rows, co_rows, co_diag);

  Matrix out = objects_current;
  const Matrix& read = (sweep == SweepOrder::gauss_seidel) ? out : objects_current;
  std::vector<double> acc(l);

  auto update_row = [&](std::size_t i) {
    std::fill(acc.begin(), acc.end(), 0.0);
    const double* weights = object_affinity.row(i);
    for (std::size_t j = 0; j < n; ++j) {
      const double w = weights[j];
      if (w == 0.0) continue;
      const double* fj = read.row(j);
      for (std::size_t c = 0; c < l; ++c) acc[c] += w * fj[c];
    }
    // the self row enters through acc at its pre-update value
    const double* self = out.row(i);
    double* target = out.row(i);
    for (std::size_t c = 0; c < l; ++c) {
      const double numer =
          base(i, c) + params.beta * (2.0 * acc[c] - co_diag[i] * self[c]);
      target[c] = numer / denom[i];
    }
  };

  for (std::size_t i = 0; i < n; ++i) update_row(i);
  assert(row_stochastic(out, 1e-9));
  return out;
}

std::vector<int> predict_labels(const Matrix& objects) {
  std::vector<int> labels(objects.rows());
  for (std::size_t i = 0; i < objects.rows(); ++i) {
    std::size_t best = 0;
    for (std::size_t c = 1; c < objects.cols(); ++c)
      if (objects(i, c) > objects(i, best)) best = c;
    labels[i] = static_cast<int>(best) + 1;
  }
  return labels;
}

namespace {

// Per-class aggregates over each group's members, scaled by the
// co-occurrence diagonal factors. With these, one row's coupling term
// costs O(methods * classes) instead of O(objects * classes).
Matrix member_aggregates(const ConsensusSystem& sys, const Matrix& objects) {
  const std::int64_t g = static_cast<std::int64_t>(sys.num_groups());
  const std::size_t l = objects.cols();
  Matrix agg(sys.num_groups(), l);
#pragma omp parallel for schedule(static)
  for (std::int64_t gi = 0; gi < g; ++gi) {
    double* out = agg.row(static_cast<std::size_t>(gi));
    for (std::size_t j : sys.group_members[static_cast<std::size_t>(gi)]) {
      const double s = sys.co_scale[j];
      const double* fj = objects.row(j);
      for (std::size_t c = 0; c < l; ++c) out[c] += s * fj[c];
    }
  }
  return agg;
}

Matrix update_objects_factored(const ConsensusSystem& sys, const Matrix& groups,
                               const Matrix& objects_current,
                               const ObjectiveParams& params,
                               const std::vector<double>& denom, SweepOrder sweep) {
  const std::size_t n = objects_current.rows();
  const std::size_t l = objects_current.cols();

  Matrix base;
  kernels::matmul(sys.group_affinity, groups, base);
  {
    const std::int64_t rows = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < rows; ++i)
      for (std::size_t c = 0; c < l; ++c)
        base(static_cast<std::size_t>(i), c) =
            params.alpha * base(static_cast<std::size_t>(i), c) +
            2.0 * params.gamma * sys.object_votes(static_cast<std::size_t>(i), c);
  }

  Matrix agg = member_aggregates(sys, objects_current);
  Matrix out = objects_current;
  std::vector<double> coupled(l), fresh(l);

  if (sweep == SweepOrder::gauss_seidel) {
    for (std::size_t i = 0; i < n; ++i) {
      std::fill(coupled.begin(), coupled.end(), 0.0);
      for (std::size_t gi : sys.object_memberships[i]) {
        const double* ag = agg.row(gi);
        for (std::size_t c = 0; c < l; ++c) coupled[c] += ag[c];
      }
      const double scale = sys.co_scale[i];
      const double diag = sys.co_diagonal[i];
      double* row = out.row(i);
      for (std::size_t c = 0; c < l; ++c) {
        const double sum_j = scale * coupled[c];  // includes the old self value
        fresh[c] = (base(i, c) + params.beta * (2.0 * sum_j - diag * row[c])) / denom[i];
      }
      // fold the row's move into the aggregates before the next row reads them
      for (std::size_t gi : sys.object_memberships[i]) {
        double* ag = agg.row(gi);
        for (std::size_t c = 0; c < l; ++c) ag[c] += scale * (fresh[c] - row[c]);
      }
      for (std::size_t c = 0; c < l; ++c) row[c] = fresh[c];
    }
  } else {
    const std::int64_t rows = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(static)
    for (std::int64_t ii = 0; ii < rows; ++ii) {
      const std::size_t i = static_cast<std::size_t>(ii);
      double sum_c;
      double* row = out.row(i);
      for (std::size_t c = 0; c < l; ++c) {
        sum_c = 0.0;
        for (std::size_t gi : sys.object_memberships[i]) sum_c += agg(gi, c);
        const double sum_j = sys.co_scale[i] * sum_c;
        row[c] = (base(i, c) +
                  params.beta * (2.0 * sum_j - sys.co_diagonal[i] *
                                                   objects_current(i, c))) /
                 denom[i];
      }
    }
  }
  assert(row_stochastic(out, 1e-9));
  return out;
}

ObjectiveTerms factored_components(const ConsensusSystem& sys, const Matrix& objects,
                                   const Matrix& groups) {
  const std::size_t n = objects.rows(), l = objects.cols(), g = groups.rows();
  ObjectiveTerms terms;

  const std::vector<double> km_rows = kernels::row_sums(sys.group_affinity);
  const std::vector<double> km_cols = kernels::col_sums(sys.group_affinity);
  Matrix cross;
  kernels::matmul(sys.group_affinity, groups, cross);
  double coherence = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double* fi = objects.row(i);
    const double* xi = cross.row(i);
    double norm = 0.0, dot = 0.0;
    for (std::size_t c = 0; c < l; ++c) {
      norm += fi[c] * fi[c];
      dot += fi[c] * xi[c];
    }
    coherence += km_rows[i] * norm - 2.0 * dot;
  }
  for (std::size_t j = 0; j < g; ++j) {
    const double* fj = groups.row(j);
    double norm = 0.0;
    for (std::size_t c = 0; c < l; ++c) norm += fj[c] * fj[c];
    coherence += km_cols[j] * norm;
  }
  terms.group_coherence = std::max(coherence, 0.0);

  // |F_i - F_j|^2 weighted by the factored affinity: expand the square and
  // route the cross term through the per-group aggregates.
  Matrix agg = member_aggregates(sys, objects);
  double weighted_norms = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double* fi = objects.row(i);
    double norm = 0.0;
    for (std::size_t c = 0; c < l; ++c) norm += fi[c] * fi[c];
    weighted_norms += sys.co_row_sums[i] * norm;
  }
  double aggregate_norms = 0.0;
  for (std::size_t gi = 0; gi < agg.rows(); ++gi) {
    const double* ag = agg.row(gi);
    for (std::size_t c = 0; c < l; ++c) aggregate_norms += ag[c] * ag[c];
  }
  terms.smoothness = std::max(2.0 * (weighted_norms - aggregate_norms), 0.0);

  for (std::size_t i = 0; i < n; ++i) {
    const double* fi = objects.row(i);
    const double* yi = sys.object_votes.row(i);
    for (std::size_t c = 0; c < l; ++c) {
      const double d = fi[c] - yi[c];
      terms.object_consensus += d * d;
    }
  }
  for (std::size_t j = 0; j < g; ++j) {
    const double* fj = groups.row(j);
    const double* yj = sys.group_votes.row(j);
    for (std::size_t c = 0; c < l; ++c) {
      const double d = fj[c] - yj[c];
      terms.group_consensus += d * d;
    }
  }
  return terms;
}

ObjectiveTerms system_components(const ConsensusSystem& sys, const Matrix& objects,
                                 const Matrix& groups) {
  if (sys.factored()) return factored_components(sys, objects, groups);
  return eval_components(objects, groups, sys.group_affinity, sys.object_affinity,
                         sys.object_votes, sys.group_votes);
}

}  // namespace

SolverResult solve(const ConsensusSystem& system, const SolverConfig& config) {
  config.validate();
  const std::size_t n = system.num_objects();
  const std::size_t g = system.num_groups();
  const std::size_t l = system.num_classes();
  if (system.group_votes.rows() != g || system.object_votes.rows() != n)
    throw ValidationError("solver: vote matrices disagree with the affinity shapes");

  std::ofstream trace;
  if (!config.trace_path.empty()) {
    trace.open(config.trace_path);
    if (!trace)
      throw IoError("solver: cannot open trace file " + config.trace_path);
    trace << "iteration,group_coherence,smoothness,object_consensus,group_consensus,"
             "objective,delta\n";
  }

  std::vector<double> denom;
  if (system.factored()) {
    denom = object_denominators(config.params, kernels::row_sums(system.group_affinity),
                                system.co_row_sums, system.co_diagonal);
  }

  ClassDistributions dist = init_distributions(n, g, l, config.seed);
  SolverResult result;
  const double norm_scale =
      config.normalized_epsilon ? std::sqrt(static_cast<double>(n * l)) : 1.0;

  Matrix previous;
  for (std::size_t iteration = 1; iteration <= config.max_iterations; ++iteration) {
    dist.groups =
        update_groups(dist.objects, system.group_affinity, system.group_votes,
                      config.params);
    ObjectiveTerms after_groups = system_components(system, dist.objects, dist.groups);
    result.half_step_objectives.push_back(after_groups.weighted(config.params));

    previous = dist.objects;
    if (system.factored()) {
      dist.objects = update_objects_factored(system, dist.groups, dist.objects,
                                             config.params, denom, config.sweep);
    } else {
      dist.objects = update_objects(dist.groups, dist.objects, system.group_affinity,
                                    system.object_affinity, system.object_votes,
                                    config.params, config.sweep);
    }
    ObjectiveTerms terms = system_components(system, dist.objects, dist.groups);
    const double objective = terms.weighted(config.params);
    result.half_step_objectives.push_back(objective);
    result.objective_trace.push_back(objective);

    const double delta =
        kernels::frobenius_distance(dist.objects, previous) / norm_scale;
    result.iterations_used = iteration;

    if (trace.is_open()) {
      trace << iteration << ',' << to_sig(terms.group_coherence) << ','
            << to_sig(terms.smoothness) << ',' << to_sig(terms.object_consensus) << ','
            << to_sig(terms.group_consensus) << ',' << to_sig(objective) << ','
            << to_sig(delta) << '\n';
    }

    if (delta <= config.epsilon) {
      result.converged = true;
      break;
    }
  }

  result.objects = std::move(dist.objects);
  result.groups = std::move(dist.groups);
  return result;
}

}  // namespace ec3
