#pragma once

// Z/mZ-gradings of a simple Lie algebra coming from inner automorphisms of
// finite order. The automorphism is never formed as a matrix; it is recorded
// by the degree of every root.

#include "thetanil/chevalley.hpp"

#include <memory>
#include <optional>
#include <vector>

namespace thetanil {

using AlgebraPtr = std::shared_ptr<const ChevalleyAlgebra>;
AlgebraPtr make_algebra(const std::string& label);
AlgebraPtr make_algebra(const RootSystem& rs);

/// Labels s_0..s_l on the extended Dynkin diagram (node 0 = affine node).
struct KacDiagram {
  IntVec labels;
  /// m = sum a_i s_i.
  int order(const RootSystem& rs) const;
  bool operator==(const KacDiagram& o) const { return labels == o.labels; }
};

/// Parses "s0,s1,...,sl".
KacDiagram parse_kac(const std::string& text);
std::string to_string(const KacDiagram& kd);

class ThetaGrading {
 public:
  AlgebraPtr alg;
  int m = 1;
  /// deg(alpha_i) in [0, m).
  IntVec simple_degrees;
  std::optional<KacDiagram> kac;
  /// deg of every root, in [0, m).
  std::vector<int> deg;
  /// Basis indices of g_i for i = 0..m-1; g_0 includes h_1..h_l.
  std::vector<std::vector<int>> component_bases;
  std::vector<int> phi0, phi1;
  std::vector<int> delta0;
  std::vector<LieElement> center_basis;
  std::vector<LieElement> semisimple_part_cartan;

  const RootSystem& rs() const { return alg->roots(); }
  int residue(long long k) const { return static_cast<int>(((k % m) + m) % m); }
  int dim(int i) const { return static_cast<int>(component_bases[residue(i)].size()); }
  std::vector<int> dims() const;
};

ThetaGrading grading_from_kac(const AlgebraPtr& alg, const KacDiagram& kd);
/// Grading with deg(alpha_i) = degrees[i] mod m.
ThetaGrading grading_from_degrees(const AlgebraPtr& alg, const IntVec& degrees, int m);

/// Basis of g_i(k) = {x in g_i : [h,x] = kx}.
std::vector<LieElement> eigenspace(const ThetaGrading& gr, const LieElement& h, const Rational& k, int i);

/// Permutations of the nodes 0..l of the extended diagram preserving it.
std::vector<IntVec> extended_diagram_automorphisms(const RootSystem& rs);

/// Label vectors with sum a_i s_i = m up to diagram automorphisms. The
/// representative of each class is the lexicographically largest member.
/// primitive_only keeps the vectors with gcd 1 (automorphisms of order
/// exactly m).
std::vector<KacDiagram> enumerate_kac_diagrams(const RootSystem& rs, int m, bool primitive_only = false);

/// Lexicographically largest image of kd under the diagram automorphisms.
KacDiagram canonical_kac(const RootSystem& rs, const KacDiagram& kd);

/// Kac diagram of exp(2 pi i ad(x)) with alpha_i(x) = 1/m for all i, found by
/// moving x into the fundamental alcove. Canonical form.
KacDiagram principal_kac_diagram(const RootSystem& rs, int m);

/// Grading obtained by folding the eigenspaces of the principal h mod m.
ThetaGrading principal_nregular_grading(const AlgebraPtr& alg, int m);

/// Dimensions of the irreducible g_0-submodules of g_1 (sorted descending).
std::vector<int> g1_module_dimensions(const ThetaGrading& gr);

/// Dynkin type of Phi_0 (e.g. "A1" or "0").
std::string phi0_type(const ThetaGrading& gr);

}  // namespace thetanil
