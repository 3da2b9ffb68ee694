#ifndef EC3_PIPELINE_HPP
#define EC3_PIPELINE_HPP

#include <cstddef>
#include <vector>

#include "ec3/bistochastic.hpp"
#include "ec3/ensemble.hpp"
#include "ec3/matrix.hpp"

namespace ec3 {

enum class Mode { ec3, iec3 };

struct PipelineOptions {
  double tol = 1e-6;
  std::size_t max_sweeps = 1000;
  // Keep the co-occurrence scaling in factored form instead of
  // materializing the dense object-object matrix. Same algorithm, same set
  // of iterates; memory and per-sweep cost drop from quadratic to linear
  // in the object count.
  bool factored_cooccurrence = false;
};

// Everything the solver consumes. group_affinity is the scaled membership
// matrix (column-normalized first in iec3 mode); the object-object
// affinity is either dense or carried as its diagonal factorization.
struct ConsensusSystem {
  Matrix group_affinity;   // objects x groups
  Matrix object_affinity;  // objects x objects; empty when factored

  std::vector<std::vector<std::size_t>> object_memberships;
  std::vector<std::vector<std::size_t>> group_members;
  std::vector<double> co_scale;
  std::vector<double> co_row_sums;
  std::vector<double> co_diagonal;

  Matrix object_votes;  // objects x classes
  Matrix group_votes;   // groups x classes

  bool factored() const { return object_affinity.empty(); }
  std::size_t num_objects() const { return group_affinity.rows(); }
  std::size_t num_groups() const { return group_affinity.cols(); }
  std::size_t num_classes() const { return object_votes.cols(); }
};

ConsensusSystem build_consensus_system(const EnsembleInput& input,
                                       const GroupCatalog& catalog, Mode mode,
                                       const PipelineOptions& options = {});

}  // namespace ec3

#endif
