#include "ec3/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <numeric>
#include <string>

#include "ec3/errors.hpp"
#include "ec3/solver.hpp"

namespace ec3 {

namespace {

// Average-rank AUC of one score column against a binary positive mask.
double binary_auc(const Matrix& scores, std::size_t column,
                  const std::vector<char>& positive) {
  const std::size_t n = positive.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return scores(a, column) < scores(b, column);
  });

  double positive_rank_sum = 0.0;
  std::size_t n_pos = 0, n_neg = 0;
  std::size_t start = 0;
  while (start < n) {
    std::size_t stop = start;
    while (stop < n && scores(order[stop], column) == scores(order[start], column))
      ++stop;
    // ranks are 1-based; tied entries share the average rank of their block
    const double mean_rank = 0.5 * static_cast<double>(start + 1 + stop);
    for (std::size_t k = start; k < stop; ++k) {
      if (positive[order[k]]) {
        positive_rank_sum += mean_rank;
        ++n_pos;
      } else {
        ++n_neg;
      }
    }
    start = stop;
  }
  if (n_pos == 0 || n_neg == 0)
    throw ValidationError("auc: need both positive and negative examples");
  return (positive_rank_sum - 0.5 * static_cast<double>(n_pos) *
                                  static_cast<double>(n_pos + 1)) /
         (static_cast<double>(n_pos) * static_cast<double>(n_neg));
}

}  // namespace

double auc(const Matrix& scores, const std::vector<int>& truth) {
  const std::size_t n = scores.rows();
  const std::size_t l = scores.cols();
  if (truth.size() != n) throw ValidationError("auc: truth length mismatch");
  if (l < 2) throw ValidationError("auc: need at least two score columns");
  for (int label : truth)
    if (label < 1 || label > static_cast<int>(l))
      throw ValidationError("auc: truth label outside 1.." + std::to_string(l));

  std::vector<std::size_t> counts(l, 0);
  for (int label : truth) ++counts[static_cast<std::size_t>(label) - 1];
  const std::size_t present =
      static_cast<std::size_t>(std::count_if(counts.begin(), counts.end(),
                                             [](std::size_t c) { return c > 0; }));
  if (present < 2) throw ValidationError("auc: truth contains a single class");

  if (l == 2) {
    std::vector<char> positive(n);
    for (std::size_t i = 0; i < n; ++i) positive[i] = truth[i] == 2;
    return binary_auc(scores, 1, positive);
  }

  double total = 0.0;
  std::size_t used = 0;
  for (std::size_t c = 0; c < l; ++c) {
    if (counts[c] == 0) {
      std::fprintf(stderr, "auc: class %zu absent from truth, skipped\n", c + 1);
      continue;
    }
    std::vector<char> positive(n);
    for (std::size_t i = 0; i < n; ++i)
      positive[i] = static_cast<std::size_t>(truth[i]) == c + 1;
    total += binary_auc(scores, c, positive);
    ++used;
  }
  return total / static_cast<double>(used);
}

Matrix hard_label_scores(const std::vector<int>& labels, std::size_t num_classes) {
  Matrix scores(labels.size(), num_classes, 0.0);
  for (std::size_t i = 0; i < labels.size(); ++i) {
    const int label = labels[i];
    if (label < 1 || label > static_cast<int>(num_classes))
      throw ValidationError("hard_label_scores: label outside range");
    scores(i, static_cast<std::size_t>(label) - 1) = 1.0;
  }
  return scores;
}

MetricReport f_score(const std::vector<int>& predicted, const std::vector<int>& truth,
                     std::size_t num_classes) {
  if (predicted.size() != truth.size())
    throw ValidationError("f_score: length mismatch");
  std::vector<double> tp(num_classes, 0.0), fp(num_classes, 0.0), fn(num_classes, 0.0);
  MetricReport report;
  report.support.assign(num_classes, 0);
  for (std::size_t i = 0; i < truth.size(); ++i) {
    const std::size_t t = static_cast<std::size_t>(truth[i]) - 1;
    const std::size_t p = static_cast<std::size_t>(predicted[i]) - 1;
    if (t >= num_classes || p >= num_classes)
      throw ValidationError("f_score: label outside range");
    ++report.support[t];
    if (t == p) {
      tp[t] += 1.0;
    } else {
      fn[t] += 1.0;
      fp[p] += 1.0;
    }
  }
  report.per_class_f.assign(num_classes, 0.0);
  for (std::size_t c = 0; c < num_classes; ++c) {
    const double precision_denom = tp[c] + fp[c];
    const double recall_denom = tp[c] + fn[c];
    const double precision = precision_denom > 0.0 ? tp[c] / precision_denom : 0.0;
    const double recall = recall_denom > 0.0 ? tp[c] / recall_denom : 0.0;
    report.per_class_f[c] =
        (precision + recall) > 0.0 ? 2.0 * precision * recall / (precision + recall) : 0.0;
  }
  if (num_classes == 2) {
    report.f_score = report.per_class_f[1];
  } else {
    double sum = 0.0;
    for (double f : report.per_class_f) sum += f;
    report.f_score = sum / static_cast<double>(num_classes);
  }
  return report;
}

double nmi(const std::vector<int>& clusters, const std::vector<int>& truth,
           NmiNormalization normalization) {
  if (clusters.size() != truth.size()) throw ValidationError("nmi: length mismatch");
  const double n = static_cast<double>(clusters.size());
  if (clusters.empty()) throw ValidationError("nmi: empty input");

  std::map<int, double> cluster_counts, truth_counts;
  std::map<std::pair<int, int>, double> joint;
  for (std::size_t i = 0; i < clusters.size(); ++i) {
    cluster_counts[clusters[i]] += 1.0;
    truth_counts[truth[i]] += 1.0;
    joint[{clusters[i], truth[i]}] += 1.0;
  }

  auto entropy = [&](const std::map<int, double>& counts) {
    double h = 0.0;
    for (const auto& [key, count] : counts) {
      (void)key;
      const double p = count / n;
      h -= p * std::log(p);
    }
    return h;
  };
  const double h_clusters = entropy(cluster_counts);
  const double h_truth = entropy(truth_counts);
  if (h_clusters == 0.0 && h_truth == 0.0) return 1.0;
  if (h_clusters == 0.0 || h_truth == 0.0) return 0.0;

  double information = 0.0;
  for (const auto& [pair, count] : joint) {
    const double p = count / n;
    const double pc = cluster_counts[pair.first] / n;
    const double pt = truth_counts[pair.second] / n;
    information += p * std::log(p / (pc * pt));
  }
  information = std::max(information, 0.0);

  const double normalizer = normalization == NmiNormalization::geometric
                                ? std::sqrt(h_clusters * h_truth)
                                : 0.5 * (h_clusters + h_truth);
  return std::clamp(information / normalizer, 0.0, 1.0);
}

MetricReport compute_metrics(const Matrix& scores, const std::vector<int>& truth) {
  MetricReport report = f_score(predict_labels(scores), truth, scores.cols());
  report.auc = auc(scores, truth);
  return report;
}

}  // namespace ec3
