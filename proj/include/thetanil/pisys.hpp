#pragma once

// pi-systems: linearly independent sets of roots with no difference of two of
// them a root. Classification up to conjugacy under a Weyl subgroup, starting
// from a basis and closing under elementary transformations.

#include "thetanil/weyl.hpp"

#include <string>
#include <vector>

namespace thetanil {

/// Sorted list of root indices.
using PiSystem = std::vector<int>;

bool is_pi_system(const RootSystem& rs, const std::vector<int>& gamma);

/// For each connected component D: add the lowest root of the subsystem with
/// basis D and erase one of the roots of D. Only pi-systems are kept.
std::vector<PiSystem> elementary_transformations(const RootSystem& rs, const PiSystem& gamma);

struct PiStats {
  std::size_t closure_size = 0;
  std::size_t maximal_classes = 0;
  std::size_t subsets_examined = 0;
};

/// Maximal pi-systems of the root subsystem with basis sub.basis, up to
/// W(sub)-conjugacy. The default subgroup is the full Weyl group.
std::vector<PiSystem> classify_maximal(const RootSystem& rs, const WeylSubgroup& sub, PiStats* stats = nullptr);
std::vector<PiSystem> classify_maximal(const RootSystem& rs);

/// All pi-systems up to conjugacy, the empty one included.
std::vector<PiSystem> classify_all(const RootSystem& rs, const WeylSubgroup& sub, PiStats* stats = nullptr);
std::vector<PiSystem> classify_all(const RootSystem& rs);

/// Removes W(basis)-conjugate duplicates, keeping the first of each class.
/// colors, when given, assigns a color to each root index (size rs.size()),
/// and only color-preserving conjugacy counts.
std::vector<PiSystem> dedup_conjugate(const RootSystem& rs, const std::vector<int>& basis,
                                      const std::vector<PiSystem>& systems, const std::vector<int>* colors = nullptr);

/// A W-invariant description used to bucket systems before conjugacy tests.
std::string pi_signature(const RootSystem& rs, const PiSystem& gamma, const std::vector<int>* colors = nullptr);

}  // namespace thetanil
