#pragma once

// Weyl group elements, minimal-length coset representatives and conjugacy of
// weights under Weyl subgroups.
//
// A weight lambda is stored by its values on the simple roots,
// p_j = (alpha_j, lambda), scaled to integers. The same vectors describe
// Cartan elements h through p_j = alpha_j(h); the reflection formulas agree.

#include "thetanil/rootsys.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace thetanil {

using Weight = std::vector<std::int64_t>;

/// Values of the root r on the simple roots, (alpha_j, r).
Weight root_weight(const RootSystem& rs, int r);
/// (beta, lambda) for the root beta.
std::int64_t root_value(const RootSystem& rs, const Weight& lambda, int beta);
/// s_beta(lambda).
Weight reflect_weight(const RootSystem& rs, int beta, const Weight& lambda);
void reflect_weight_inplace(const RootSystem& rs, int beta, Weight& lambda);
/// Scales a rational weight (simple-root coordinates) to an integer Weight.
/// Returns the weight and the positive scale factor used.
std::pair<Weight, Integer> weight_from_coords(const RootSystem& rs, const RatVec& coords);

class WeylElement {
 public:
  /// Identity element.
  explicit WeylElement(const RootSystem& rs);
  /// w = s_{word[0]} s_{word[1]} ... (rightmost factor acts first).
  static WeylElement from_word(const RootSystem& rs, const std::vector<int>& word);
  /// w = s_{r_k} ... s_{r_1} where refl = (r_1, ..., r_k) are root indices,
  /// i.e. the reflections are applied in the order listed.
  static WeylElement from_reflections(const RootSystem& rs, const std::vector<int>& refl);

  const std::vector<int>& word() const { return word_; }
  /// Index of w(root r).
  int operator()(int r) const { return perm_[r]; }
  const std::vector<int>& perm() const { return perm_; }
  Weight apply(const RootSystem& rs, const Weight& lambda) const;

  WeylElement operator*(const WeylElement& other) const;
  WeylElement inverse() const;
  bool operator==(const WeylElement& o) const { return perm_ == o.perm_; }
  bool operator!=(const WeylElement& o) const { return perm_ != o.perm_; }

 private:
  WeylElement() = default;
  std::vector<int> word_;
  std::vector<int> perm_;
  int npos_ = 0;

  friend std::int64_t length(const RootSystem& rs, const WeylElement& w);
};

/// #{alpha > 0 : w(alpha) < 0}.
std::int64_t length(const RootSystem& rs, const WeylElement& w);

/// Reduced word of the reflection in the positive root r (a palindrome).
const std::vector<int>& reflection_word(const RootSystem& rs, int r);

/// Weyl subgroup generated by the reflections in a pi-system of positive roots.
struct WeylSubgroup {
  std::vector<int> basis;
  static WeylSubgroup full(const RootSystem& rs);
  /// Subgroup generated by the reflections in arbitrary roots; the basis is
  /// the positive simple system of the root subsystem they generate.
  static WeylSubgroup generated_by(const RootSystem& rs, const std::vector<int>& roots);
};

/// Minimal-length representatives of the right cosets W0 w.
struct CosetReps {
  std::vector<std::vector<int>> words;
  std::vector<std::int64_t> per_level;
};
CosetReps coset_words(const RootSystem& rs, const WeylSubgroup& sub);
std::vector<WeylElement> shortest_coset_reps(const RootSystem& rs, const WeylSubgroup& sub);

/// Applies the word (rightmost letter first) to lambda.
Weight apply_word(const RootSystem& rs, const std::vector<int>& word, const Weight& lambda);

/// Reduces mu into the fundamental chamber of sub. The second member lists the
/// reflecting roots in the order applied.
std::pair<Weight, std::vector<int>> subdominant_path(const RootSystem& rs, const std::vector<int>& basis,
                                                     const Weight& mu);
std::pair<Weight, WeylElement> to_subdominant(const RootSystem& rs, const WeylSubgroup& sub, const Weight& mu);

/// Positive pi-system whose reflections generate Stab_{W0}(lambda).
std::vector<int> stabilizer_generators(const RootSystem& rs, const WeylSubgroup& sub, const Weight& lambda);

/// w in W0 with w(mu_i) = lambda_i for all i, if any.
std::optional<WeylElement> conjugate_tuples(const RootSystem& rs, const WeylSubgroup& sub,
                                            const std::vector<Weight>& mu, const std::vector<Weight>& lambda);

/// w in W0 with w(g1) = g2 as sets of roots. Optional colors restrict the
/// matching to color-preserving bijections.
std::optional<WeylElement> conjugate_sets(const RootSystem& rs, const WeylSubgroup& sub,
                                          const std::vector<int>& g1, const std::vector<int>& g2,
                                          const std::vector<int>* colors1 = nullptr,
                                          const std::vector<int>* colors2 = nullptr);

/// Cheaper variant that only answers yes/no.
bool sets_conjugate(const RootSystem& rs, const std::vector<int>& basis, const std::vector<int>& g1,
                    const std::vector<int>& g2, const std::vector<int>* colors1 = nullptr,
                    const std::vector<int>* colors2 = nullptr);

}  // namespace thetanil
