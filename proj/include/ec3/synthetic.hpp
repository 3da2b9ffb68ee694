#ifndef EC3_SYNTHETIC_HPP
#define EC3_SYNTHETIC_HPP

#include <cstdint>

#include "ec3/learners.hpp"

namespace ec3 {

// Gaussian blob family standing in for benchmark datasets at desk scale.
struct SyntheticSpec {
  std::size_t num_objects = 600;
  std::size_t num_classes = 3;
  std::size_t feature_dim = 2;
  double separation = 3.0;  // pairwise center distance, in units of the blob sigma
  std::uint64_t seed = 1;

  void validate() const;
};

// Unit-variance isotropic blobs, near-balanced classes (sizes differ by at
// most one), deterministic per seed. Centers sit pairwise `separation`
// apart when feature_dim >= num_classes, otherwise on a circle with that
// chord between neighbors.
Dataset generate_synthetic(const SyntheticSpec& spec);

}  // namespace ec3

#endif
