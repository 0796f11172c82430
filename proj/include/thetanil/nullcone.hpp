#pragma once

// Orbit dimensions, components of the nullcone of g_1 and the search for
// N-regular automorphisms of a given order.

#include "thetanil/method2.hpp"

#include <string>

namespace thetanil {

struct NullconeSummary {
  /// Nonzero orbits; the zero orbit is listed among the records but not
  /// counted here, as in the published tables.
  int orbit_count = 0;
  int component_count = 0;
  int component_dim = 0;
  int rank = 0;
  bool nregular = false;
  bool very_nregular = false;
};

/// dim [g_0, e].
int orbit_dimension(const ThetaGrading& gr, const LieElement& e);

/// Labels alpha_i(h+) of the dominant W-conjugate of h.
WeightedDynkinDiagram ambient_wdd(const ChevalleyAlgebra& alg, const Sl2Triple& t);
WeightedDynkinDiagram ambient_wdd(const RootSystem& rs, const Weight& h_values);

/// Fills dim and wdd of every record.
void annotate(const ThetaGrading& gr, std::vector<OrbitRecord>& records, int threads = 1);

/// Records must be annotated.
NullconeSummary summarize(const ThetaGrading& gr, const std::vector<OrbitRecord>& records);

enum class Method { Auto, One, Two };
Method parse_method(const std::string& s);
/// Method I when |W|/|W_l| <= 5000, else Method II.
Method choose_method(const ThetaGrading& gr);

struct Classification {
  std::vector<OrbitRecord> records;
  Method used = Method::One;
  Method1Stats stats1;
  Method2Stats stats2;
};
/// Runs the requested method and annotates the records.
Classification classify(const ThetaGrading& gr, Method method, const RunOptions& opt = {});

struct SurveyRow {
  int m = 0;
  KacDiagram kac;
  ThetaGrading grading;
  Classification result;
  NullconeSummary summary;
};

/// The order-m Kac diagram whose g_1 contains a regular nilpotent element,
/// with its orbit data. By default the diagram is located as the principal
/// one and then confirmed by its classification. With exhaustive set, every
/// primitive diagram of order m is classified and exactly one must be
/// N-regular. Throws std::logic_error on any inconsistency.
SurveyRow nregular_survey(const AlgebraPtr& alg, int m, Method method = Method::Auto, const RunOptions& opt = {},
                          bool exhaustive = false);

}  // namespace thetanil
