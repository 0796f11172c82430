#pragma once

// The pipeline stages behind the command line tool. Each command returns
// its output as text so it can be reused from the Python module.

#include "thetanil/serialize.hpp"

#include <optional>
#include <string>

namespace thetanil {

struct RunConfig {
  std::string type;  // e.g. "G2"
  std::optional<KacDiagram> kac;
  std::optional<int> nregular_order;
  Method method = Method::Auto;
  RunOptions run;
  bool json = false;
};

std::string cmd_roots(const std::string& type);

struct CosetConfig {
  std::string type;
  /// Nodes of the extended diagram to drop (0 = affine node); the rest
  /// generate the subgroup.
  std::optional<std::vector<int>> extended_minus;
  /// Simple roots (1-based) generating the subgroup.
  std::optional<std::vector<int>> simple;
  /// Subgroup W_l of a Kac diagram grading.
  std::optional<KacDiagram> kac;
  bool words = false;
};
std::string cmd_cosets(const CosetConfig& cfg);

std::string cmd_pisystems(const std::string& type);

/// Builds the grading named by cfg (Kac labels or the N-regular diagram of
/// the given order).
ThetaGrading grading_for(const RunConfig& cfg);
std::string cmd_orbits(const RunConfig& cfg);

std::string cmd_nregular(const std::string& type, int lo, int hi, Method method, const RunOptions& run);

std::string cmd_wdd(const std::string& type);

/// Parses "a..b" or a single integer.
std::pair<int, int> parse_range(const std::string& text);
std::vector<int> parse_int_list(const std::string& text);

}  // namespace thetanil
