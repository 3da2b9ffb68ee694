#include "ec3/synthetic.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include "ec3/errors.hpp"

namespace ec3 {

void SyntheticSpec::validate() const {
  if (num_classes < 2) throw ValidationError("synthetic: need at least 2 classes");
  if (num_objects < num_classes)
    throw ValidationError("synthetic: need at least one object per class");
  if (!(separation > 0.0)) throw ValidationError("synthetic: separation must be positive");
  if (feature_dim < 2) throw ValidationError("synthetic: need at least 2 features");
}

Dataset generate_synthetic(const SyntheticSpec& spec) {
  spec.validate();
  const std::size_t n = spec.num_objects;
  const std::size_t l = spec.num_classes;
  const std::size_t d = spec.feature_dim;

  Matrix centers(l, d, 0.0);
  if (d >= l) {
    // scaled axis corners: every pair sits exactly `separation` apart
    const double radius = spec.separation / std::sqrt(2.0);
    for (std::size_t c = 0; c < l; ++c) centers(c, c) = radius;
  } else {
    // ring with neighbor chord = separation
    const double radius =
        spec.separation / (2.0 * std::sin(std::numbers::pi / static_cast<double>(l)));
    for (std::size_t c = 0; c < l; ++c) {
      const double angle = 2.0 * std::numbers::pi * static_cast<double>(c) /
                           static_cast<double>(l);
      centers(c, 0) = radius * std::cos(angle);
      centers(c, 1) = radius * std::sin(angle);
    }
  }

  Dataset data;
  data.num_classes = l;
  data.features = Matrix(n, d);
  data.labels.resize(n);
  std::mt19937_64 rng(spec.seed);
  std::normal_distribution<double> noise(0.0, 1.0);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t c = i % l;  // round-robin keeps classes within one of each other
    data.labels[i] = static_cast<int>(c) + 1;
    for (std::size_t j = 0; j < d; ++j)
      data.features(i, j) = centers(c, j) + noise(rng);
  }
  return data;
}

}  // namespace ec3
