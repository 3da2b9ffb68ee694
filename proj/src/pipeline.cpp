#include "ec3/pipeline.hpp"

namespace ec3 {

ConsensusSystem build_consensus_system(const EnsembleInput& input,
                                       const GroupCatalog& catalog, Mode mode,
                                       const PipelineOptions& options) {
  ConsensusSystem system;

  const Matrix membership = build_membership(input, catalog);
  if (mode == Mode::iec3) {
    system.group_affinity =
        kl_bistochastic_rectangular(column_normalize(membership), options.tol,
                                    options.max_sweeps)
            .matrix;
  } else {
    system.group_affinity =
        kl_bistochastic_rectangular(membership, options.tol, options.max_sweeps).matrix;
  }

  system.object_memberships = catalog.object_memberships(input.num_objects);
  system.group_members.reserve(catalog.size());
  for (const Group& group : catalog.groups) system.group_members.push_back(group.members);

  // The co-occurrence affinity always comes from the raw membership; the
  // imbalance variant only reweights the group affinity.
  if (options.factored_cooccurrence) {
    FactoredCooccurrence fc = kl_bistochastic_cooccurrence(
        system.object_memberships, catalog.size(), options.tol, options.max_sweeps);
    system.co_scale = std::move(fc.scale);
    system.co_row_sums = std::move(fc.row_sums);
    system.co_diagonal = std::move(fc.diagonal);
  } else {
    system.object_affinity =
        kl_bistochastic_square(build_cooccurrence(membership), options.tol,
                               options.max_sweeps)
            .matrix;
  }

  VoteMatrices votes = build_votes(input, catalog);
  system.object_votes = std::move(votes.object_votes);
  system.group_votes = std::move(votes.group_votes);
  return system;
}

}  // namespace ec3
