#ifndef EC3_ENSEMBLE_HPP
#define EC3_ENSEMBLE_HPP

#include <cstddef>
#include <vector>

#include "ec3/matrix.hpp"

namespace ec3 {

// Raw per-object outputs of the base methods. Labels are 1-based and live
// in {1..num_classes}; cluster ids are 1-based and contiguous per method.
// true_labels is carried for evaluation only and never feeds the fusion.
struct EnsembleInput {
  std::size_t num_objects = 0;
  std::size_t num_classes = 0;
  std::vector<std::vector<int>> classifier_outputs;
  std::vector<std::vector<int>> clustering_outputs;
  std::vector<int> true_labels;

  std::size_t num_classifiers() const { return classifier_outputs.size(); }
  std::size_t num_clusterers() const { return clustering_outputs.size(); }
  std::size_t num_methods() const { return num_classifiers() + num_clusterers(); }

  // Throws ValidationError on any broken invariant.
  void validate() const;
};

// Rewrites every clustering column so ids form 1..k in order of first
// appearance. Raw ids carry no semantics.
void relabel_clusters(EnsembleInput& input);

enum class GroupKind { classifier, clusterer };

struct Group {
  std::size_t method = 0;  // index into the source method list
  GroupKind kind = GroupKind::classifier;
  int label = 0;  // class label or cluster id within the method
  std::vector<std::size_t> members;  // ascending object indices
};

// All base groups in a fixed order: classifier groups first (method order,
// then class order), then clusterer groups (method order, then ascending
// cluster id). Empty groups are dropped.
struct GroupCatalog {
  std::vector<Group> groups;
  std::size_t classifier_groups = 0;
  std::size_t clusterer_groups = 0;

  std::size_t size() const { return groups.size(); }

  // object index -> indices of the groups containing it (one per method)
  std::vector<std::vector<std::size_t>> object_memberships(std::size_t num_objects) const;
};

GroupCatalog build_group_catalog(const EnsembleInput& input);

// Binary object-group incidence, one matrix row per object. Every row sums
// to the number of base methods.
Matrix build_membership(const EnsembleInput& input, const GroupCatalog& catalog);

// membership * membership^T: entry (i, j) counts the base groups shared by
// objects i and j; the diagonal equals the number of base methods.
Matrix build_cooccurrence(const Matrix& membership);

struct VoteMatrices {
  Matrix object_votes;  // N x l, row i = fraction of classifiers voting each class
  Matrix group_votes;   // G x l, row g = classifier votes pooled over members
};

VoteMatrices build_votes(const EnsembleInput& input, const GroupCatalog& catalog);

}  // namespace ec3

#endif
