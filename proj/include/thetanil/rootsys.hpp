#pragma once

// Root systems of the simple types, built from their Cartan matrices.
//
// Simple roots are numbered as in Bourbaki. For G2, alpha_1 is short. The
// invariant form is scaled so that short roots have squared length 2, which
// keeps every inner product of roots an integer.

#include "thetanil/exact.hpp"

#include <string>
#include <unordered_map>
#include <vector>

namespace thetanil {

struct CoordHash {
  std::size_t operator()(const IntVec& v) const noexcept {
    std::size_t h = 0x9e3779b97f4a7c15ULL;
    for (int x : v) h = (h ^ static_cast<std::size_t>(x + 1000)) * 0x100000001b3ULL;
    return h;
  }
};

class RootSystem {
 public:
  char type = 'A';
  int rank = 0;
  /// cartan[i][j] = <alpha_i, alpha_j^vee>.
  std::vector<IntVec> cartan;
  /// form[i][j] = (alpha_i, alpha_j).
  std::vector<IntVec> form;
  /// Positive roots ordered by height then lexicographically, followed by
  /// their negatives in the same order. Root i and i + npos are opposite.
  std::vector<IntVec> roots;
  int npos = 0;
  /// a_0..a_l, a_0 = 1.
  IntVec marks;
  IntVec highest_root;
  /// For each positive root, a palindromic word in the simple reflections
  /// equal to its reflection.
  std::vector<std::vector<int>> reflection_words;

  std::string label() const { return std::string(1, type) + std::to_string(rank); }
  int size() const { return static_cast<int>(roots.size()); }
  bool positive(int r) const { return r < npos; }
  int neg(int r) const { return r < npos ? r + npos : r - npos; }
  int height(int r) const;
  /// Index of the simple root alpha_i (0-based i).
  int simple(int i) const { return i; }

  /// Root index of coords, or -1.
  int find(const IntVec& coords) const;

  /// (alpha, beta) for root indices.
  int inner(int a, int b) const { return inner_[a * size() + b]; }
  int norm2(int a) const { return inner(a, a); }
  /// <alpha, beta^vee>.
  int pair(int a, int b) const { return pair_[a * size() + b]; }
  /// Index of s_a(b).
  int reflect(int a, int b) const { return reflect_[a * size() + b]; }
  /// Index of a + b, or -1 when a + b is not a root.
  int sum(int a, int b) const { return sum_[a * size() + b]; }

  /// Coordinates of alpha^vee in the basis of simple coroots.
  RatVec coroot(int a) const;
  /// (x, y) for vectors in simple-root coordinates.
  Rational inner_coords(const RatVec& x, const RatVec& y) const;

  friend RootSystem build_root_system(char type, int rank);

 private:
  std::vector<int> inner_, pair_, reflect_, sum_;
  std::unordered_map<IntVec, int, CoordHash> index_;
};

/// Throws std::invalid_argument naming the violated constraint.
RootSystem build_root_system(char type, int rank);
/// Accepts labels such as "E8", "a3", "G2".
RootSystem build_root_system(const std::string& label);
void check_type(char type, int rank);

/// <lambda, mu^vee> for lambda in simple-root coordinates.
Rational pairing(const RootSystem& rs, const RatVec& lambda, const IntVec& mu);

/// Roots of the subsystem generated by the reflections in gens (closure of
/// gens under those reflections).
std::vector<int> reflection_closure(const RootSystem& rs, const std::vector<int>& gens);

/// The simple roots of a root subsystem, taken positive with respect to the
/// ambient positive system.
std::vector<int> simple_system(const RootSystem& rs, const std::vector<int>& subsystem);

/// Roots of the subsystem spanned by a pi-system together with their
/// coordinates relative to it.
struct SubsystemRoots {
  std::vector<int> roots;
  std::vector<IntVec> coords;
};
SubsystemRoots subsystem_with_coords(const RootSystem& rs, const std::vector<int>& basis);

/// Lowest root of the subsystem with the given connected basis.
int lowest_root_of_subsystem(const RootSystem& rs, const std::vector<int>& basis);

/// True when the Dynkin diagram of basis (edges where (a,b) != 0) is connected.
bool connected(const RootSystem& rs, const std::vector<int>& basis);
std::vector<std::vector<int>> components(const RootSystem& rs, const std::vector<int>& basis);

/// Dimension of the span of a set of roots.
std::size_t root_rank(const RootSystem& rs, const std::vector<int>& roots);

/// Dynkin type of a pi-system, e.g. "A2+2A1". In B, C, F and G ambient
/// systems a simply laced component made of short roots gets a '~' suffix,
/// so long and short A1 are told apart.
std::string dynkin_type(const RootSystem& rs, const std::vector<int>& basis);

/// |W| for the Weyl group of a simple type.
Integer weyl_group_order(char type, int rank);
/// |W| of the subgroup generated by the reflections in a pi-system.
Integer weyl_group_order(const RootSystem& rs, const std::vector<int>& basis);

}  // namespace thetanil
