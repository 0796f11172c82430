#pragma once

// A simple Lie algebra given by integer structure constants relative to a
// Chevalley basis: x_alpha for every root (in root order), then h_1..h_l with
// h_i = [x_{alpha_i}, x_{-alpha_i}].
//
// Signs: N_{alpha,beta} = +(p+1) on extraspecial pairs, positive roots ordered
// by height and then by the root order of RootSystem. Everything else follows
// from the standard identities.

#include "thetanil/rootsys.hpp"

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace thetanil {

/// Coefficient vector over the Chevalley basis.
using LieElement = RatVec;

class ChevalleyAlgebra {
 public:
  explicit ChevalleyAlgebra(RootSystem rs);

  const RootSystem& roots() const { return *rs_; }
  std::shared_ptr<const RootSystem> roots_ptr() const { return rs_; }
  int dim() const { return nroots_ + rank_; }
  int rank() const { return rank_; }
  int root_index(int r) const { return r; }
  int cartan_index(int i) const { return nroots_ + i; }
  bool is_cartan_index(int k) const { return k >= nroots_; }

  /// N_{a,b} with [x_a, x_b] = N_{a,b} x_{a+b}; 0 when a+b is not a root.
  int N(int a, int b) const { return n_[a * nroots_ + b]; }

  /// Bracket of two basis vectors as (index, coefficient) pairs.
  std::vector<std::pair<int, int>> basis_bracket(int i, int j) const;

  LieElement zero() const { return LieElement(dim()); }
  LieElement basis(int k) const;
  /// Cartan element with coordinates c in the basis h_1..h_l.
  LieElement cartan_element(const RatVec& c) const;
  /// Cartan element h with alpha_i(h) = values[i].
  LieElement cartan_from_values(const RatVec& values) const;
  /// alpha_i(h) for a Cartan element h (the root-vector part must vanish).
  RatVec cartan_values(const LieElement& h) const;
  /// alpha(h) for the root alpha.
  Rational root_value(const LieElement& h, int alpha) const;
  /// Coordinates of h_alpha in the basis h_1..h_l.
  const RatVec& coroot(int a) const { return coroots_[a]; }

  std::string basis_label(int k) const;
  /// Parses labels produced by basis_label; -1 if unknown.
  int basis_from_label(const std::string& label) const;

 private:
  std::shared_ptr<const RootSystem> rs_;
  int nroots_ = 0;
  int rank_ = 0;
  std::vector<int> n_;
  std::vector<RatVec> coroots_;
  RatMatrix cartan_inverse_;
};

ChevalleyAlgebra build_algebra(const RootSystem& rs);

LieElement bracket(const ChevalleyAlgebra& alg, const LieElement& x, const LieElement& y);
LieElement add(const LieElement& x, const LieElement& y);
LieElement sub(const LieElement& x, const LieElement& y);
LieElement scale(const Rational& c, const LieElement& x);
bool is_zero(const LieElement& x);

/// Columns are bracket(x, domain[i]) written in the codomain basis. Throws
/// std::invalid_argument when some image leaves the span of codomain.
RatMatrix ad_matrix(const ChevalleyAlgebra& alg, const LieElement& x, const std::vector<LieElement>& domain,
                    const std::vector<LieElement>& codomain);
/// Full adjoint matrix in the Chevalley basis.
RatMatrix ad_matrix(const ChevalleyAlgebra& alg, const LieElement& x);

bool is_nilpotent(const ChevalleyAlgebra& alg, const LieElement& x);
Rational killing_form(const ChevalleyAlgebra& alg, const LieElement& x, const LieElement& y);

struct Sl2Triple {
  LieElement h, e, f;
};

/// Checks [h,e] = 2e, [h,f] = -2f, [e,f] = h exactly.
bool is_sl2_triple(const ChevalleyAlgebra& alg, const Sl2Triple& t);

/// Solves [e,f] = h for f in span(f_space).
std::optional<Sl2Triple> complete_sl2(const ChevalleyAlgebra& alg, const LieElement& h, const LieElement& e,
                                      const std::vector<LieElement>& f_space);

}  // namespace thetanil
