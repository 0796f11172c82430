#pragma once

// JSON form of an orbit classification. Keys are sorted, rationals are
// "num/den" strings in lowest terms, Lie elements are lists of
// [basis label, coefficient] pairs over the nonzero coefficients.

#include "thetanil/nullcone.hpp"

#include <optional>
#include <string>

namespace thetanil {

inline constexpr int kSchemaVersion = 1;

struct OrbitFile {
  AlgebraPtr alg;
  std::optional<KacDiagram> kac;
  int m = 1;
  std::string method;
  std::uint64_t seed = 0;
  std::vector<int> dims;
  std::string phi0;
  std::vector<OrbitRecord> records;
  NullconeSummary summary;
};

OrbitFile make_orbit_file(const ThetaGrading& gr, const Classification& c, std::uint64_t seed);

std::string lie_element_json(const ChevalleyAlgebra& alg, const LieElement& x);
std::string to_json(const OrbitFile& f);
/// Throws std::invalid_argument on malformed input.
OrbitFile orbit_file_from_json(const std::string& text);

}  // namespace thetanil
