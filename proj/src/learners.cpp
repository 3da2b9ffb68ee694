#include "ec3/learners.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>

#include "ec3/errors.hpp"

namespace ec3 {

namespace {

double squared_dist(const double* a, const double* b, std::size_t d) {
  double s = 0.0;
  for (std::size_t j = 0; j < d; ++j) {
    const double diff = a[j] - b[j];
    s += diff * diff;
  }
  return s;
}

std::vector<int> relabel_first_appearance(std::vector<int> ids) {
  std::vector<int> remap(*std::max_element(ids.begin(), ids.end()) + 1, 0);
  int next = 0;
  for (int& id : ids) {
    if (remap[static_cast<std::size_t>(id)] == 0) remap[static_cast<std::size_t>(id)] = ++next;
    id = remap[static_cast<std::size_t>(id)];
  }
  return ids;
}

}  // namespace

std::vector<int> nearest_centroid_predict(const Matrix& train_x,
                                          const std::vector<int>& train_y,
                                          std::size_t num_classes,
                                          const Matrix& test_x) {
  const std::size_t d = train_x.cols();
  Matrix centroids(num_classes, d, 0.0);
  std::vector<double> counts(num_classes, 0.0);
  for (std::size_t i = 0; i < train_x.rows(); ++i) {
    const std::size_t c = static_cast<std::size_t>(train_y[i]) - 1;
    counts[c] += 1.0;
    for (std::size_t j = 0; j < d; ++j) centroids(c, j) += train_x(i, j);
  }
  for (std::size_t c = 0; c < num_classes; ++c)
    if (counts[c] > 0.0)
      for (std::size_t j = 0; j < d; ++j) centroids(c, j) /= counts[c];

  std::vector<int> predictions(test_x.rows());
  for (std::size_t i = 0; i < test_x.rows(); ++i) {
    double best = std::numeric_limits<double>::max();
    std::size_t best_c = 0;
    for (std::size_t c = 0; c < num_classes; ++c) {
      if (counts[c] == 0.0) continue;  // class absent from training data
      const double dist = squared_dist(test_x.row(i), centroids.row(c), d);
      if (dist < best) {
        best = dist;
        best_c = c;
      }
    }
    predictions[i] = static_cast<int>(best_c) + 1;
  }
  return predictions;
}

std::vector<int> knn_predict(const Matrix& train_x, const std::vector<int>& train_y,
                             std::size_t num_classes, const Matrix& test_x,
                             std::size_t k) {
  const std::size_t n = train_x.rows();
  const std::size_t d = train_x.cols();
  k = std::min(k, n);
  if (k == 0) throw ValidationError("knn: empty training set");

  std::vector<std::pair<double, std::size_t>> dist(n);
  std::vector<int> predictions(test_x.rows());
  std::vector<double> votes(num_classes);
  for (std::size_t i = 0; i < test_x.rows(); ++i) {
    for (std::size_t t = 0; t < n; ++t)
      dist[t] = {squared_dist(test_x.row(i), train_x.row(t), d), t};
    std::partial_sort(dist.begin(), dist.begin() + static_cast<std::ptrdiff_t>(k),
                      dist.end());
    std::fill(votes.begin(), votes.end(), 0.0);
    for (std::size_t t = 0; t < k; ++t)
      votes[static_cast<std::size_t>(train_y[dist[t].second]) - 1] += 1.0;
    predictions[i] =
        static_cast<int>(std::max_element(votes.begin(), votes.end()) - votes.begin()) + 1;
  }
  return predictions;
}

Stump stump_fit(const Matrix& train_x, const std::vector<int>& train_y,
                std::size_t num_classes, int forced_feature) {
  const std::size_t n = train_x.rows();
  const std::size_t d = train_x.cols();
  if (n == 0) throw ValidationError("stump: empty training set");

  Stump best;
  std::size_t best_errors = n + 1;

  std::vector<std::size_t> order(n);
  std::vector<std::size_t> left(num_classes), right(num_classes);
  const std::size_t first = forced_feature >= 0 ? static_cast<std::size_t>(forced_feature) : 0;
  const std::size_t last = forced_feature >= 0 ? first + 1 : d;
  for (std::size_t f = first; f < last; ++f) {
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return train_x(a, f) < train_x(b, f);
    });
    std::fill(left.begin(), left.end(), 0);
    std::fill(right.begin(), right.end(), 0);
    for (int y : train_y) ++right[static_cast<std::size_t>(y) - 1];

    for (std::size_t cut = 0; cut + 1 < n; ++cut) {
      const std::size_t idx = order[cut];
      const std::size_t c = static_cast<std::size_t>(train_y[idx]) - 1;
      ++left[c];
      --right[c];
      const double lo = train_x(idx, f);
      const double hi = train_x(order[cut + 1], f);
      if (lo == hi) continue;  // can't split between equal values

      const std::size_t left_major = static_cast<std::size_t>(
          std::max_element(left.begin(), left.end()) - left.begin());
      const std::size_t right_major = static_cast<std::size_t>(
          std::max_element(right.begin(), right.end()) - right.begin());
      const std::size_t errors =
          (cut + 1 - left[left_major]) + (n - cut - 1 - right[right_major]);
      if (errors < best_errors) {
        best_errors = errors;
        best.feature = f;
        best.threshold = 0.5 * (lo + hi);
        best.below = static_cast<int>(left_major) + 1;
        best.above = static_cast<int>(right_major) + 1;
      }
    }
  }
  if (best_errors > n) {
    // degenerate feature column(s): predict the overall majority
    std::vector<std::size_t> counts(num_classes, 0);
    for (int y : train_y) ++counts[static_cast<std::size_t>(y) - 1];
    best.feature = first;
    best.threshold = 0.0;
    best.below = best.above = static_cast<int>(std::max_element(counts.begin(),
                                                                counts.end()) -
                                               counts.begin()) +
                              1;
  }
  return best;
}

std::vector<int> stump_predict(const Stump& stump, const Matrix& test_x) {
  std::vector<int> predictions(test_x.rows());
  for (std::size_t i = 0; i < test_x.rows(); ++i)
    predictions[i] = test_x(i, stump.feature) <= stump.threshold ? stump.below : stump.above;
  return predictions;
}

std::vector<int> kmeans_cluster(const Matrix& x, std::size_t k, std::uint64_t seed,
                                std::size_t max_rounds) {
  const std::size_t n = x.rows();
  const std::size_t d = x.cols();
  if (k == 0 || k > n) throw ValidationError("kmeans: cluster count outside 1..n");

  std::mt19937_64 rng(seed);
  std::vector<std::size_t> pick(n);
  std::iota(pick.begin(), pick.end(), std::size_t{0});
  std::shuffle(pick.begin(), pick.end(), rng);
  Matrix centers(k, d);
  for (std::size_t c = 0; c < k; ++c)
    for (std::size_t j = 0; j < d; ++j) centers(c, j) = x(pick[c], j);

  std::vector<int> assignment(n, 0);
  std::vector<double> counts(k);
  for (std::size_t round = 0; round < max_rounds; ++round) {
    bool changed = false;
    for (std::size_t i = 0; i < n; ++i) {
      double best = std::numeric_limits<double>::max();
      int best_c = 0;
      for (std::size_t c = 0; c < k; ++c) {
        const double dist = squared_dist(x.row(i), centers.row(c), d);
        if (dist < best) {
          best = dist;
          best_c = static_cast<int>(c);
        }
      }
      if (assignment[i] != best_c + 1) changed = true;
      assignment[i] = best_c + 1;
    }

    centers = Matrix(k, d, 0.0);
    std::fill(counts.begin(), counts.end(), 0.0);
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t c = static_cast<std::size_t>(assignment[i]) - 1;
      counts[c] += 1.0;
      for (std::size_t j = 0; j < d; ++j) centers(c, j) += x(i, j);
    }
    for (std::size_t c = 0; c < k; ++c) {
      if (counts[c] > 0.0) {
        for (std::size_t j = 0; j < d; ++j) centers(c, j) /= counts[c];
      } else {
        // re-seed an empty cluster with the point farthest from its center
        double farthest = -1.0;
        std::size_t far_i = 0;
        for (std::size_t i = 0; i < n; ++i) {
          const std::size_t own = static_cast<std::size_t>(assignment[i]) - 1;
          if (counts[own] <= 1.0) continue;
          const double dist = squared_dist(x.row(i), centers.row(own), d);
          if (dist > farthest) {
            farthest = dist;
            far_i = i;
          }
        }
        for (std::size_t j = 0; j < d; ++j) centers(c, j) = x(far_i, j);
        changed = true;
      }
    }
    if (!changed) break;
  }
  return relabel_first_appearance(assignment);
}

double centroid_silhouette(const Matrix& x, const std::vector<int>& assignment,
                           std::size_t k) {
  const std::size_t n = x.rows();
  const std::size_t d = x.cols();
  if (k < 2) return -1.0;
  Matrix centers(k, d, 0.0);
  std::vector<double> counts(k, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t c = static_cast<std::size_t>(assignment[i]) - 1;
    counts[c] += 1.0;
    for (std::size_t j = 0; j < d; ++j) centers(c, j) += x(i, j);
  }
  for (std::size_t c = 0; c < k; ++c)
    if (counts[c] > 0.0)
      for (std::size_t j = 0; j < d; ++j) centers(c, j) /= counts[c];

  double total = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t own = static_cast<std::size_t>(assignment[i]) - 1;
    const double a = std::sqrt(squared_dist(x.row(i), centers.row(own), d));
    double b = std::numeric_limits<double>::max();
    for (std::size_t c = 0; c < k; ++c) {
      if (c == own || counts[c] == 0.0) continue;
      b = std::min(b, std::sqrt(squared_dist(x.row(i), centers.row(c), d)));
    }
    const double denom = std::max(a, b);
    total += denom > 0.0 ? (b - a) / denom : 0.0;
  }
  return total / static_cast<double>(n);
}

std::size_t pick_kmeans_k(const Matrix& x, const std::vector<std::size_t>& candidates,
                          std::uint64_t seed) {
  double best_score = -std::numeric_limits<double>::max();
  std::size_t best_k = 0;
  for (std::size_t k : candidates) {
    if (k < 2 || k > x.rows()) continue;
    const std::vector<int> assignment = kmeans_cluster(x, k, seed);
    const std::size_t actual =
        static_cast<std::size_t>(*std::max_element(assignment.begin(), assignment.end()));
    const double score = centroid_silhouette(x, assignment, actual);
    if (score > best_score) {
      best_score = score;
      best_k = k;
    }
  }
  if (best_k == 0) throw ValidationError("kmeans: no feasible cluster count");
  return best_k;
}

std::vector<int> single_linkage_cluster(const Matrix& x, std::size_t k) {
  const std::size_t n = x.rows();
  const std::size_t d = x.cols();
  if (k == 0 || k > n) throw ValidationError("single linkage: cluster count outside 1..n");

  // Prim's algorithm; the MST edge set is all single linkage needs.
  std::vector<double> best(n, std::numeric_limits<double>::max());
  std::vector<std::size_t> parent(n, 0);
  std::vector<char> in_tree(n, 0);
  struct Edge {
    double weight;
    std::size_t a, b;
  };
  std::vector<Edge> edges;
  edges.reserve(n > 0 ? n - 1 : 0);

  std::size_t current = 0;
  in_tree[0] = 1;
  for (std::size_t added = 1; added < n; ++added) {
    for (std::size_t j = 0; j < n; ++j) {
      if (in_tree[j]) continue;
      const double dist = squared_dist(x.row(current), x.row(j), d);
      if (dist < best[j]) {
        best[j] = dist;
        parent[j] = current;
      }
    }
    double lowest = std::numeric_limits<double>::max();
    std::size_t next = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (!in_tree[j] && best[j] < lowest) {
        lowest = best[j];
        next = j;
      }
    }
    in_tree[next] = 1;
    edges.push_back({best[next], parent[next], next});
    current = next;
  }

  // cut the k-1 heaviest edges
  std::sort(edges.begin(), edges.end(),
            [](const Edge& a, const Edge& b) { return a.weight > b.weight; });
  std::vector<std::size_t> root(n);
  std::iota(root.begin(), root.end(), std::size_t{0});
  auto find = [&](std::size_t v) {
    while (root[v] != v) {
      root[v] = root[root[v]];
      v = root[v];
    }
    return v;
  };
  for (std::size_t e = (k > n ? 0 : k - 1); e < edges.size(); ++e) {
    const std::size_t ra = find(edges[e].a);
    const std::size_t rb = find(edges[e].b);
    if (ra != rb) root[ra] = rb;
  }

  std::vector<int> assignment(n);
  for (std::size_t i = 0; i < n; ++i) assignment[i] = static_cast<int>(find(i)) + 1;
  return relabel_first_appearance(assignment);
}

}  // namespace ec3
