#include "ec3/ensemble.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "ec3/errors.hpp"
#include "ec3/kernels.hpp"

namespace ec3 {

void EnsembleInput::validate() const {
  if (num_objects == 0) throw ValidationError("input: no objects");
  if (num_classes < 2) throw ValidationError("input: need at least 2 classes");
  if (classifier_outputs.empty())
    throw ValidationError("input: at least one base classifier is required");
  for (std::size_t m = 0; m < classifier_outputs.size(); ++m) {
    const auto& col = classifier_outputs[m];
    if (col.size() != num_objects)
      throw ValidationError("input: classifier " + std::to_string(m + 1) +
                            " has " + std::to_string(col.size()) + " outputs, expected " +
                            std::to_string(num_objects));
    for (int label : col)
      if (label < 1 || label > static_cast<int>(num_classes))
        throw ValidationError("input: classifier " + std::to_string(m + 1) +
                              " emits label " + std::to_string(label) +
                              " outside 1.." + std::to_string(num_classes));
  }
  for (std::size_t m = 0; m < clustering_outputs.size(); ++m) {
    const auto& col = clustering_outputs[m];
    if (col.size() != num_objects)
      throw ValidationError("input: clustering " + std::to_string(m + 1) +
                            " has " + std::to_string(col.size()) + " outputs, expected " +
                            std::to_string(num_objects));
    int max_id = 0;
    std::vector<char> seen;
    for (int id : col) {
      if (id < 1)
        throw ValidationError("input: clustering " + std::to_string(m + 1) +
                              " emits non-positive cluster id");
      if (id > max_id) {
        max_id = id;
        seen.resize(static_cast<std::size_t>(max_id), 0);
      }
      seen[static_cast<std::size_t>(id) - 1] = 1;
    }
    for (int id = 0; id < max_id; ++id)
      if (!seen[static_cast<std::size_t>(id)])
        throw ValidationError("input: clustering " + std::to_string(m + 1) +
                              " has no members in cluster " + std::to_string(id + 1) +
                              " (ids must be contiguous)");
  }
  if (!true_labels.empty()) {
    if (true_labels.size() != num_objects)
      throw ValidationError("input: true_labels length mismatch");
    for (int label : true_labels)
      if (label < 1 || label > static_cast<int>(num_classes))
        throw ValidationError("input: true label outside 1.." + std::to_string(num_classes));
  }
}

void relabel_clusters(EnsembleInput& input) {
  for (auto& col : input.clustering_outputs) {
    std::map<int, int> remap;
    for (int& id : col) {
      auto [it, inserted] = remap.try_emplace(id, static_cast<int>(remap.size()) + 1);
      id = it->second;
      (void)inserted;
    }
  }
}

std::vector<std::vector<std::size_t>> GroupCatalog::object_memberships(
    std::size_t num_objects) const {
  std::vector<std::vector<std::size_t>> memberships(num_objects);
  for (std::size_t g = 0; g < groups.size(); ++g)
    for (std::size_t i : groups[g].members) memberships[i].push_back(g);
  return memberships;
}

GroupCatalog build_group_catalog(const EnsembleInput& input) {
  input.validate();
  GroupCatalog catalog;

  for (std::size_t m = 0; m < input.classifier_outputs.size(); ++m) {
    const auto& col = input.classifier_outputs[m];
    for (int label = 1; label <= static_cast<int>(input.num_classes); ++label) {
      Group group;
      group.method = m;
      group.kind = GroupKind::classifier;
      group.label = label;
      for (std::size_t i = 0; i < col.size(); ++i)
        if (col[i] == label) group.members.push_back(i);
      if (group.members.empty()) continue;  // a class this classifier never predicts
      catalog.groups.push_back(std::move(group));
      ++catalog.classifier_groups;
    }
  }

  for (std::size_t m = 0; m < input.clustering_outputs.size(); ++m) {
    const auto& col = input.clustering_outputs[m];
    const int max_id = *std::max_element(col.begin(), col.end());
    for (int id = 1; id <= max_id; ++id) {
      Group group;
      group.method = m;
      group.kind = GroupKind::clusterer;
      group.label = id;
      for (std::size_t i = 0; i < col.size(); ++i)
        if (col[i] == id) group.members.push_back(i);
      if (group.members.empty()) continue;
      catalog.groups.push_back(std::move(group));
      ++catalog.clusterer_groups;
    }
  }

  return catalog;
}

Matrix build_membership(const EnsembleInput& input, const GroupCatalog& catalog) {
  Matrix membership(input.num_objects, catalog.size(), 0.0);
  for (std::size_t g = 0; g < catalog.size(); ++g)
    for (std::size_t i : catalog.groups[g].members) membership(i, g) = 1.0;
  return membership;
}

Matrix build_cooccurrence(const Matrix& membership) {
  Matrix product;
  kernels::gram(membership, product);
  return product;
}

VoteMatrices build_votes(const EnsembleInput& input, const GroupCatalog& catalog) {
  const std::size_t n = input.num_objects;
  const std::size_t l = input.num_classes;
  const double c1 = static_cast<double>(input.num_classifiers());

  // Raw per-object vote counts, reused for the group pooling below.
  Matrix counts(n, l, 0.0);
  for (const auto& col : input.classifier_outputs)
    for (std::size_t i = 0; i < n; ++i)
      counts(i, static_cast<std::size_t>(col[i]) - 1) += 1.0;

  VoteMatrices votes;
  votes.object_votes = Matrix(n, l, 0.0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < l; ++j) votes.object_votes(i, j) = counts(i, j) / c1;

  // A group's row pools the classifier votes of its members: every member
  // contributes its c1 vote instances.
  votes.group_votes = Matrix(catalog.size(), l, 0.0);
  for (std::size_t g = 0; g < catalog.size(); ++g) {
    const auto& members = catalog.groups[g].members;
    const double denom = static_cast<double>(members.size()) * c1;
    for (std::size_t i : members)
      for (std::size_t j = 0; j < l; ++j) votes.group_votes(g, j) += counts(i, j);
    for (std::size_t j = 0; j < l; ++j) votes.group_votes(g, j) /= denom;
  }
  return votes;
}

}  // namespace ec3
