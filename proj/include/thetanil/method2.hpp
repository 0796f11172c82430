#pragma once

// Nilpotent G_0-orbits through carrier algebras: graded pi-systems in
// Phi_0 u Phi_1, their completions, and the locally flat ones.

#include "thetanil/method1.hpp"
#include "thetanil/pisys.hpp"

namespace thetanil {

struct GradedCandidate {
  std::vector<int> pi0, pi1;
  std::vector<int> all() const;
};

struct CompletionResult {
  /// Defining element h_0 and its values alpha_i(h_0).
  LieElement h0;
  RatVec h0_values;
  std::vector<LieElement> z_basis;
  std::vector<int> psi0, psi1;
  bool flat = false;
};

struct Method2Stats {
  std::size_t p0_count = 0;
  std::size_t maximal_count = 0;
  /// |P|, after removing repeated root sets.
  std::size_t candidates = 0;
  std::size_t flat = 0;
};

std::vector<GradedCandidate> candidate_pi_systems(const ThetaGrading& gr, Method2Stats* stats = nullptr);

/// Completion data of a nonempty candidate. The flat flag tells whether
/// the completion is locally flat.
CompletionResult completion_data(const ThetaGrading& gr, const GradedCandidate& cand);
/// Same, but absent unless flat.
std::optional<CompletionResult> completion(const ThetaGrading& gr, const GradedCandidate& cand);

std::vector<OrbitRecord> method2(const ThetaGrading& gr, const RunOptions& opt = {}, Method2Stats* stats = nullptr);

}  // namespace thetanil
