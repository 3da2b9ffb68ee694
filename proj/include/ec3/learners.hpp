#ifndef EC3_LEARNERS_HPP
#define EC3_LEARNERS_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include "ec3/matrix.hpp"

// Deliberately small stand-in base methods. The fusion treats base outputs
// as opaque, so what matters here is output diversity, determinism, and
// speed, not state-of-the-art accuracy.

namespace ec3 {

struct Dataset {
  Matrix features;  // objects x dimensions
  std::vector<int> labels;  // 1..num_classes
  std::size_t num_classes = 0;
};

// --- classifiers ------------------------------------------------------

std::vector<int> nearest_centroid_predict(const Matrix& train_x,
                                          const std::vector<int>& train_y,
                                          std::size_t num_classes,
                                          const Matrix& test_x);

std::vector<int> knn_predict(const Matrix& train_x, const std::vector<int>& train_y,
                             std::size_t num_classes, const Matrix& test_x,
                             std::size_t k = 5);

// Single-feature threshold classifier: majority class on each side of the
// best training split. Only ever emits two distinct labels; with more
// classes some classes go unpredicted, which downstream handles by
// dropping the empty groups.
struct Stump {
  std::size_t feature = 0;
  double threshold = 0.0;
  int below = 1;
  int above = 1;
};

Stump stump_fit(const Matrix& train_x, const std::vector<int>& train_y,
                std::size_t num_classes, int forced_feature = -1);
std::vector<int> stump_predict(const Stump& stump, const Matrix& test_x);

// --- clusterers ---------------------------------------------------------

// Lloyd iterations from seeded random centers; empty clusters are re-seeded
// with the point farthest from its center. Ids are 1..k by first appearance.
std::vector<int> kmeans_cluster(const Matrix& x, std::size_t k, std::uint64_t seed,
                                std::size_t max_rounds = 60);

// Mean over points of (b - a) / max(a, b) with a the distance to the own
// center and b to the nearest other center.
double centroid_silhouette(const Matrix& x, const std::vector<int>& assignment,
                           std::size_t k);

// Best candidate cluster count by the silhouette-style score above.
std::size_t pick_kmeans_k(const Matrix& x, const std::vector<std::size_t>& candidates,
                          std::uint64_t seed);

// Minimum-spanning-tree single linkage cut into k components.
std::vector<int> single_linkage_cluster(const Matrix& x, std::size_t k);

}  // namespace ec3

#endif
