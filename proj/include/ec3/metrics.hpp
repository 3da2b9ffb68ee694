#ifndef EC3_METRICS_HPP
#define EC3_METRICS_HPP

#include <cstddef>
#include <vector>

#include "ec3/matrix.hpp"

namespace ec3 {

struct MetricReport {
  double auc = 0.0;
  double f_score = 0.0;
  std::vector<double> per_class_f;  // one entry per class
  std::vector<std::size_t> support;  // truth counts per class
};

// Rank-based AUC. Binary problems score the positive (second) class; with
// more classes the result is the unweighted mean of one-vs-rest AUCs.
// Classes absent from the truth are skipped with a warning on stderr;
// single-class truth is an error.
double auc(const Matrix& scores, const std::vector<int>& truth);

// One-hot score rows from hard labels, for the label-only AUC variant.
Matrix hard_label_scores(const std::vector<int>& labels, std::size_t num_classes);

// Per-class F1 plus the headline value: the positive-class F1 for binary
// problems, the macro average otherwise.
MetricReport f_score(const std::vector<int>& predicted, const std::vector<int>& truth,
                     std::size_t num_classes);

enum class NmiNormalization { geometric, arithmetic };

// Mutual information between two partitions over the entropy normalizer.
// Returns 0 when exactly one side has zero entropy, 1 when both do.
double nmi(const std::vector<int>& clusters, const std::vector<int>& truth,
           NmiNormalization normalization = NmiNormalization::geometric);

// auc + f_score with predictions taken as the per-row argmax of scores.
MetricReport compute_metrics(const Matrix& scores, const std::vector<int>& truth);

}  // namespace ec3

#endif
