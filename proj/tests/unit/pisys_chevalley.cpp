#include "doctest.h"
#include "oracles.hpp"
#include "thetanil/method1.hpp"
#include "thetanil/pisys.hpp"

#include <random>
#include <set>

using namespace thetanil;

namespace {

int root_of(const RootSystem& rs, IntVec c) {
  int r = rs.find(c);
  REQUIRE(r >= 0);
  return r;
}

// Sparse bracket of basis vectors as a dense vector.
LieElement basis_bracket_vec(const ChevalleyAlgebra& alg, int i, int j) {
  LieElement v = alg.zero();
  for (const auto& [k, c] : alg.basis_bracket(i, j)) v[k] += c;
  return v;
}

}  // namespace

TEST_CASE("is_pi_system") {
  RootSystem a2 = build_root_system("A2");
  CHECK(is_pi_system(a2, {0, 1}));
  CHECK_FALSE(is_pi_system(a2, {0, root_of(a2, {1, 1})}));
  CHECK_FALSE(is_pi_system(a2, {0, root_of(a2, {-1, -1}), 1}));
  for (const char* label : {"B2", "G2", "A3"}) {
    RootSystem rs = build_root_system(label);
    for (int a = 0; a < rs.size(); ++a)
      for (int b = a + 1; b < rs.size(); ++b) CHECK(is_pi_system(rs, {a, b}) == oracle::pi_system(rs, {a, b}));
  }
}

TEST_CASE("elementary transformations") {
  RootSystem a1 = build_root_system("A1");
  auto t = elementary_transformations(a1, {0});
  CHECK(std::find(t.begin(), t.end(), PiSystem{a1.neg(0)}) != t.end());

  RootSystem a2 = build_root_system("A2");
  int low = root_of(a2, {-1, -1});
  auto ta2 = elementary_transformations(a2, {0, 1});
  REQUIRE(!ta2.empty());
  for (const auto& s : ta2) {
    CHECK(std::find(s.begin(), s.end(), low) != s.end());
    CHECK(is_pi_system(a2, s));
  }
  PiSystem want{0, low};
  std::sort(want.begin(), want.end());
  CHECK(std::find(ta2.begin(), ta2.end(), want) != ta2.end());

  RootSystem g2 = build_root_system("G2");
  int lg = root_of(g2, {-3, -2});
  auto tg = elementary_transformations(g2, {0, 1});
  std::set<PiSystem> got(tg.begin(), tg.end());
  std::set<PiSystem> expect;
  for (int keep : {0, 1}) {
    PiSystem s{keep, lg};
    std::sort(s.begin(), s.end());
    if (oracle::pi_system(g2, s)) expect.insert(s);
  }
  CHECK(got == expect);
  CHECK(expect.size() == 2);
}

TEST_CASE("pi-system classes against brute force") {
  for (const char* label : {"A1", "A2", "B2", "G2"}) {
    RootSystem rs = build_root_system(label);
    auto classes = classify_all(rs);
    CHECK(classes.size() == oracle::pi_system_classes(rs));
    CHECK(std::find(classes.begin(), classes.end(), PiSystem{}) != classes.end());
    auto w = oracle::weyl_group(rs);
    for (std::size_t i = 0; i < classes.size(); ++i) {
      CHECK(oracle::pi_system(rs, classes[i]));
      for (std::size_t j = i + 1; j < classes.size(); ++j) {
        bool conj = false;
        for (const auto& x : w) conj = conj || oracle::image(x, classes[i]) == classes[j];
        CHECK_FALSE(conj);
      }
    }
  }
  CHECK(classify_all(build_root_system("A1")).size() == 2);
  CHECK(classify_all(build_root_system("A2")).size() == 3);
}

TEST_CASE("maximal pi-systems") {
  CHECK(classify_maximal(build_root_system("A1")).size() == 1);
  CHECK(classify_maximal(build_root_system("A2")).size() == 1);
  RootSystem g2 = build_root_system("G2");
  std::set<std::string> types;
  for (const auto& s : classify_maximal(g2)) types.insert(dynkin_type(g2, s));
  CHECK(types.count("G2"));
  CHECK(types.count("A2"));
  CHECK(types.count("A1+A1~"));
}

TEST_CASE("pi-systems of rank 3 and 4 are pairwise non-conjugate") {
  for (const char* label : {"A3", "B3", "C3"}) {
    RootSystem rs = build_root_system(label);
    auto classes = classify_all(rs);
    auto w = oracle::weyl_group(rs);
    std::set<std::vector<int>> canon;
    for (const auto& c : classes) {
      CHECK(oracle::pi_system(rs, c));
      std::vector<int> best = c;
      for (const auto& x : w) best = std::min(best, oracle::image(x, c));
      canon.insert(best);
    }
    CHECK(canon.size() == classes.size());
  }
}

TEST_CASE("sl2 and small structure constants") {
  AlgebraPtr a1 = make_algebra("A1");
  const int e = 0, f = 1, h = a1->cartan_index(0);
  CHECK(basis_bracket_vec(*a1, h, e) == scale(2, a1->basis(e)));
  CHECK(basis_bracket_vec(*a1, h, f) == scale(-2, a1->basis(f)));
  CHECK(basis_bracket_vec(*a1, e, f) == a1->basis(h));
  CHECK(killing_form(*a1, a1->basis(h), a1->basis(h)) == 8);
  CHECK(killing_form(*a1, a1->basis(e), a1->basis(e)) == 0);
  CHECK(killing_form(*a1, a1->basis(e), a1->basis(f)) != 0);

  AlgebraPtr a2 = make_algebra("A2");
  CHECK(std::abs(a2->N(0, 1)) == 1);
  auto m = ad_matrix(*a2, a2->basis(0), {a2->basis(1)}, {a2->basis(root_of(a2->roots(), {1, 1}))});
  CHECK(abs(m(0, 0)) == 1);
  auto mh = ad_matrix(*a1, a1->basis(h), {a1->basis(e)}, {a1->basis(e)});
  CHECK(mh(0, 0) == 2);

  AlgebraPtr g2 = make_algebra("G2");
  CHECK(std::abs(g2->N(0, root_of(g2->roots(), {1, 1}))) == 2);
  LieElement x = add(g2->basis(0), g2->basis(g2->cartan_index(1)));
  CHECK(is_zero(bracket(*g2, x, x)));
}

TEST_CASE("Jacobi identity on all basis triples") {
  for (const char* label : {"A1", "A2", "B2", "G2", "A3", "B3", "C3", "A4", "B4", "C4", "D4", "F4"}) {
    AlgebraPtr alg = make_algebra(label);
    const int n = alg->dim();
    // table of brackets as sparse lists
    std::vector<std::vector<std::pair<int, int>>> t(n * n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) t[i * n + j] = alg->basis_bracket(i, j);
    bool ok = true;
    std::vector<long> acc(n);
    for (int i = 0; i < n && ok; ++i)
      for (int j = 0; j < n && ok; ++j) {
        ok = ok && [&] {
          // antisymmetry
          auto a = t[i * n + j], b = t[j * n + i];
          std::map<int, int> s;
          for (auto [k, c] : a) s[k] += c;
          for (auto [k, c] : b) s[k] += c;
          return std::all_of(s.begin(), s.end(), [](auto p) { return p.second == 0; });
        }();
        for (int k = 0; k < n && ok; ++k) {
          std::fill(acc.begin(), acc.end(), 0);
          // [i,[j,k]] + [j,[k,i]] + [k,[i,j]]
          for (auto [p, c] : t[j * n + k])
            for (auto [q, d] : t[i * n + p]) acc[q] += long(c) * d;
          for (auto [p, c] : t[k * n + i])
            for (auto [q, d] : t[j * n + p]) acc[q] += long(c) * d;
          for (auto [p, c] : t[i * n + j])
            for (auto [q, d] : t[k * n + p]) acc[q] += long(c) * d;
          ok = std::all_of(acc.begin(), acc.end(), [](long v) { return v == 0; });
        }
      }
    CHECK_MESSAGE(ok, label);
  }
}

TEST_CASE("Chevalley basis matches the matrix model of sl_n") {
  for (const char* label : {"A1", "A2", "A3"}) {
    AlgebraPtr alg = make_algebra(label);
    oracle::SlnRep phi(*alg);
    for (int i = 0; i < alg->dim(); ++i) {
      CHECK_FALSE(phi.basis[i].zero());
      for (int j = 0; j < alg->dim(); ++j)
        CHECK(phi(basis_bracket_vec(*alg, i, j)) == oracle::commutator(phi.basis[i], phi.basis[j]));
    }
  }
}

TEST_CASE("nilpotency against matrices") {
  AlgebraPtr a1 = make_algebra("A1");
  CHECK(is_nilpotent(*a1, a1->zero()));
  CHECK_FALSE(is_nilpotent(*a1, a1->basis(a1->cartan_index(0))));
  CHECK_FALSE(is_nilpotent(*a1, add(a1->basis(0), a1->basis(1))));

  std::mt19937 rng(7);
  for (const char* label : {"A2", "A3"}) {
    AlgebraPtr alg = make_algebra(label);
    oracle::SlnRep phi(*alg);
    const RootSystem& rs = alg->roots();
    for (int trial = 0; trial < 60; ++trial) {
      LieElement x = alg->zero();
      // strictly upper triangular part plus a few random extras
      for (int r = 0; r < rs.npos; ++r) x[r] = int(rng() % 5) - 2;
      if (trial % 3 == 1) x[rs.neg(int(rng() % rs.npos))] = int(rng() % 3) + 1;
      if (trial % 3 == 2) x[alg->cartan_index(0)] = 1;
      CHECK(is_nilpotent(*alg, x) == oracle::nilpotent(phi(x)));
    }
  }
}

TEST_CASE("sl2 completion") {
  AlgebraPtr a1 = make_algebra("A1");
  LieElement h = a1->basis(a1->cartan_index(0));
  auto t = complete_sl2(*a1, h, a1->basis(0), {a1->basis(1)});
  REQUIRE(t);
  CHECK(t->f == a1->basis(1));
  CHECK(is_sl2_triple(*a1, *t));
  CHECK_FALSE(complete_sl2(*a1, h, a1->zero(), {a1->basis(1)}));

  CHECK(h_from_wdd(*a1, {2}) == h);
  CHECK(is_zero(h_from_wdd(*a1, {0})));
  AlgebraPtr a2 = make_algebra("A2");
  CHECK(h_from_wdd(*a2, {1, 1}) == add(a2->basis(a2->cartan_index(0)), a2->basis(a2->cartan_index(1))));
}
