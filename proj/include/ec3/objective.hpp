#ifndef EC3_OBJECTIVE_HPP
#define EC3_OBJECTIVE_HPP

#include <cstddef>

#include "ec3/matrix.hpp"

namespace ec3 {

// Weights of the four objective components. Feasible settings satisfy
// 0 < alpha <= 1, 0 <= beta, gamma, delta <= 1 and alpha + beta + gamma +
// delta = 1. The printed additive constraint in the source material halves
// alpha and beta, but every concrete parameter set it reports sums to one
// plainly, so that is the form enforced here.
struct ObjectiveParams {
  double alpha = 0.25;
  double beta = 0.35;
  double gamma = 0.35;
  double delta = 0.05;

  void validate() const;  // throws ValidationError
};

// Unweighted values of the four squared-distance components:
//   group_coherence   sum_ij affinity^m_ij |objects_i - groups_j|^2
//   smoothness        sum_ij affinity^c_ij |objects_i - objects_j|^2
//   object_consensus  sum_i  |objects_i - object_votes_i|^2
//   group_consensus   sum_j  |groups_j - group_votes_j|^2
struct ObjectiveTerms {
  double group_coherence = 0.0;
  double smoothness = 0.0;
  double object_consensus = 0.0;
  double group_consensus = 0.0;

  double weighted(const ObjectiveParams& p) const {
    return 0.5 * p.alpha * group_coherence + 0.5 * p.beta * smoothness +
           p.gamma * object_consensus + p.delta * group_consensus;
  }
};

ObjectiveTerms eval_components(const Matrix& objects, const Matrix& groups,
                               const Matrix& group_affinity,
                               const Matrix& object_affinity,
                               const Matrix& object_votes,
                               const Matrix& group_votes);

double eval_objective(const Matrix& objects, const Matrix& groups,
                      const Matrix& group_affinity, const Matrix& object_affinity,
                      const Matrix& object_votes, const Matrix& group_votes,
                      const ObjectiveParams& params);

// identity minus the (bi-stochastic) object affinity; the graph Laplacian
// behind the smoothness term. Rows sum to zero and the matrix is PSD.
Matrix laplacian(const Matrix& object_affinity);

}  // namespace ec3

#endif
