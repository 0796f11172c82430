#pragma once

// Normal sl2-triples through the characteristics of the nilpotent G-orbits:
// sweep every characteristic over the coset representatives of W_l in W and
// keep the images that are normal.

#include "thetanil/grading.hpp"
#include "thetanil/weyl.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace thetanil {

using WeightedDynkinDiagram = IntVec;

struct OrbitRecord {
  Sl2Triple triple;
  /// alpha_i(h); dominant for Delta_0.
  Weight h_values;
  int dim = -1;
  WeightedDynkinDiagram wdd;
};

struct RunOptions {
  std::uint64_t seed = 1;
  std::int64_t omega_cap = std::int64_t{1} << 20;
  int threads = 1;
};

/// The random search for e in general position ran past the sampling cap.
/// Retrying with another seed or a larger cap is meaningful.
class RetryBudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Cartan element with alpha_i(h) = d_i.
LieElement h_from_wdd(const ChevalleyAlgebra& alg, const WeightedDynkinDiagram& d);
Weight weight_of(const ChevalleyAlgebra& alg, const LieElement& h);

struct Characteristic {
  WeightedDynkinDiagram wdd;
  LieElement h;
};
/// Weighted Dynkin diagrams of the nilpotent orbits of g, zero orbit first.
/// Results are cached per type.
std::vector<Characteristic> classify_nilpotent_g(const ChevalleyAlgebra& alg);

/// Normal triple (h, e, f) with e in g_1, f in g_{-1}, if h is normal.
std::optional<Sl2Triple> decide_normal(const ThetaGrading& gr, const LieElement& h, const RunOptions& opt = {});
std::optional<Sl2Triple> decide_normal(const ThetaGrading& gr, const Weight& h_values, const RunOptions& opt = {});

/// Images of h under the coset representatives, tested for normality.
std::vector<Sl2Triple> normal_list(const ThetaGrading& gr, const std::vector<std::vector<int>>& coset_words,
                                   const LieElement& h, const RunOptions& opt = {});

struct Method1Stats {
  std::size_t coset_count = 0;
  std::size_t characteristics = 0;
  /// Distinct images of the nonzero characteristics tested for normality.
  std::size_t h_count = 0;
};

/// All nilpotent G_0-orbits in g_1, zero orbit first, the rest sorted by h.
std::vector<OrbitRecord> method1(const ThetaGrading& gr, const RunOptions& opt = {}, Method1Stats* stats = nullptr);

/// Zero record followed by the others in ascending order of h_values.
void sort_records(std::vector<OrbitRecord>& records);
OrbitRecord zero_record(const ThetaGrading& gr);

}  // namespace thetanil
