#ifndef EC3_BISTOCHASTIC_HPP
#define EC3_BISTOCHASTIC_HPP

#include <cstddef>
#include <vector>

#include "ec3/matrix.hpp"

namespace ec3 {

// Output of an iterative scaling run. `matrix` is the bi-stochastic
// approximation; `residuals[s]` is the Frobenius distance between the
// iterates before and after sweep s. The scaling acts diagonally, so
// matrix == diag(row_scale) * input * diag(col_scale) up to rounding.
struct ScalingResult {
  Matrix matrix;
  std::vector<double> residuals;
  bool converged = false;
  std::vector<double> row_scale;
  std::vector<double> col_scale;

  double residual() const { return residuals.empty() ? 0.0 : residuals.back(); }
  std::size_t sweeps() const { return residuals.size(); }
};

// Square symmetric case: repeat (row-normalize, then symmetrize each pair
// by its elementwise geometric mean) until the Frobenius distance between
// successive iterates drops to tol. The limit has unit row and column sums
// and stays symmetric and nonnegative; zeros are never filled in.
ScalingResult kl_bistochastic_square(const Matrix& a, double tol = 1e-6,
                                     std::size_t max_sweeps = 1000);

// Rectangular case (n x g): alternately scale rows to sum 1 and columns to
// sum n/g, same stopping rule. This is the bipartite restriction of the
// square iteration; the symmetrization step does not apply.
ScalingResult kl_bistochastic_rectangular(const Matrix& a, double tol = 1e-6,
                                          std::size_t max_sweeps = 1000);

// Divides every column by its sum. Used to de-bias the membership matrix
// toward small groups before scaling (the class-imbalance variant).
Matrix column_normalize(const Matrix& membership);

// Factored run of the square scaling over the co-occurrence matrix
// membership * membership^T without materializing it: every iterate equals
// diag(scale) * cooccurrence * diag(scale), so tracking `scale` suffices.
// Produces the same sweep sequence and stopping decisions as the dense
// operation up to rounding, in O(objects * methods^2) per sweep.
struct FactoredCooccurrence {
  std::vector<double> scale;      // diagonal of the factorization
  std::vector<double> row_sums;   // row sums of the final iterate
  std::vector<double> diagonal;   // diagonal entries of the final iterate
  std::vector<double> residuals;
  bool converged = false;
};

FactoredCooccurrence kl_bistochastic_cooccurrence(
    const std::vector<std::vector<std::size_t>>& object_memberships,
    std::size_t num_groups, double tol = 1e-6, std::size_t max_sweeps = 1000);

}  // namespace ec3

#endif
