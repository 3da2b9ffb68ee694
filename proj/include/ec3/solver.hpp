#ifndef EC3_SOLVER_HPP
#define EC3_SOLVER_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "ec3/matrix.hpp"
#include "ec3/objective.hpp"
#include "ec3/pipeline.hpp"

namespace ec3 {

enum class SweepOrder {
  // Rows updated in ascending object order, each row seeing the rows
  // already updated this sweep. Default; descent is monotone.
  gauss_seidel,
  // All rows computed from the previous sweep's values.
  jacobi,
};

struct SolverConfig {
  ObjectiveParams params;
  double epsilon = 0.025;  // threshold on the Frobenius change of the object block
  std::size_t max_iterations = 500;
  Mode mode = Mode::iec3;  // informational echo; the pipeline fixes the semantics
  std::uint64_t seed = 0;
  SweepOrder sweep = SweepOrder::gauss_seidel;
  // Divide the Frobenius change by sqrt(objects * classes) before
  // comparing against epsilon.
  bool normalized_epsilon = false;
  std::string trace_path;  // per-iteration CSV when non-empty

  void validate() const;
};

struct ClassDistributions {
  Matrix objects;  // N x l, row stochastic
  Matrix groups;   // G x l, row stochastic
};

struct SolverResult {
  Matrix objects;
  Matrix groups;
  std::vector<double> objective_trace;       // one value per iteration
  std::vector<double> half_step_objectives;  // after every half-step, two per iteration
  std::size_t iterations_used = 0;
  bool converged = false;
};

// Rows drawn uniformly from the probability simplex, deterministic per seed.
ClassDistributions init_distributions(std::size_t num_objects, std::size_t num_groups,
                                      std::size_t num_classes, std::uint64_t seed);

// Exact minimizer of the objective over the group block with the object
// block fixed. Each output row is a convex combination of data that sums
// to one, so row stochasticity is preserved by construction.
Matrix update_groups(const Matrix& objects, const Matrix& group_affinity,
                     const Matrix& group_votes, const ObjectiveParams& params);

// One sweep over the object block with the group block fixed. The
// denominator and the self-coupling term follow the closed-form row update;
// under gauss_seidel each row reads the freshest values of the others.
Matrix update_objects(const Matrix& groups, const Matrix& objects_current,
                      const Matrix& group_affinity, const Matrix& object_affinity,
                      const Matrix& object_votes, const ObjectiveParams& params,
                      SweepOrder sweep = SweepOrder::gauss_seidel);

// Alternate the two block updates until the object block moves less than
// epsilon in Frobenius norm or the iteration budget runs out.
SolverResult solve(const ConsensusSystem& system, const SolverConfig& config);

// argmax per row; ties resolve to the lowest class index. Labels are 1-based.
std::vector<int> predict_labels(const Matrix& objects);

}  // namespace ec3

#endif
