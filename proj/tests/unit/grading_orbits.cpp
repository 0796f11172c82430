#include "doctest.h"
#include "oracles.hpp"
#include "thetanil/nullcone.hpp"

#include <set>

using namespace thetanil;

namespace {

int root_of(const RootSystem& rs, IntVec c) {
  int r = rs.find(c);
  REQUIRE(r >= 0);
  return r;
}

// The order-3 grading of sl_4 with g_0 = sl_2 + T_2 spanned by h_1, h_2,
// h_3, e_34, e_43.
ThetaGrading sl4_order3() { return grading_from_degrees(make_algebra("A3"), {1, 1, 0}, 3); }

std::set<Weight> h_set(const std::vector<OrbitRecord>& recs) {
  std::set<Weight> s;
  for (const auto& r : recs) s.insert(r.h_values);
  return s;
}

bool in_component(const ThetaGrading& gr, const LieElement& x, int i) {
  std::vector<char> ok(gr.alg->dim(), 0);
  for (int k : gr.component_bases[gr.residue(i)]) ok[k] = 1;
  for (int k = 0; k < gr.alg->dim(); ++k)
    if (sgn(x[k]) && !ok[k]) return false;
  return true;
}

oracle::Mat diag(std::vector<int> d) {
  oracle::Mat m(static_cast<int>(d.size()));
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

}  // namespace

TEST_CASE("A1 grading with labels (1,1)") {
  AlgebraPtr a1 = make_algebra("A1");
  ThetaGrading gr = grading_from_kac(a1, parse_kac("1,1"));
  CHECK(gr.m == 2);
  CHECK(gr.dims() == std::vector<int>{1, 2});
  CHECK(gr.phi0.empty());
  CHECK(gr.phi1.size() == 2);
  CHECK(principal_nregular_grading(a1, 2).dims() == gr.dims());
}

TEST_CASE("Kac diagram parsing and validation") {
  RootSystem g2 = build_root_system("G2");
  CHECK(parse_kac("0,0,1").order(g2) == 2);
  CHECK_THROWS_AS(parse_kac("1,x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_kac("1,-1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_kac("1,1").order(g2), std::invalid_argument);
  CHECK_THROWS_AS(grading_from_kac(make_algebra("G2"), parse_kac("0,0,0")), std::invalid_argument);
}

TEST_CASE("Kac diagram enumeration against brute force") {
  RootSystem g2 = build_root_system("G2");
  auto d2 = enumerate_kac_diagrams(g2, 2);
  CHECK(d2.size() == 2);
  CHECK(std::find(d2.begin(), d2.end(), KacDiagram{{2, 0, 0}}) != d2.end());
  CHECK(std::find(d2.begin(), d2.end(), KacDiagram{{0, 0, 1}}) != d2.end());
  CHECK(enumerate_kac_diagrams(build_root_system("A1"), 2).size() == 2);

  for (const char* label : {"A1", "A2", "B2", "G2", "A3", "B3", "C3", "F4", "D4"}) {
    RootSystem rs = build_root_system(label);
    auto one = enumerate_kac_diagrams(rs, 1);
    REQUIRE(one.size() == 1);
    CHECK(one[0].labels[0] == 1);
    for (int m = 1; m <= 7; ++m) {
      CHECK(enumerate_kac_diagrams(rs, m).size() == oracle::kac_classes(rs, m, false));
      CHECK(enumerate_kac_diagrams(rs, m, true).size() == oracle::kac_classes(rs, m, true));
      for (const auto& kd : enumerate_kac_diagrams(rs, m)) {
        CHECK(kd.order(rs) == m);
        CHECK(canonical_kac(rs, kd) == kd);
      }
    }
  }
}

TEST_CASE("gradings respect brackets") {
  for (const char* label : {"A3", "B3", "G2", "F4"}) {
    AlgebraPtr alg = make_algebra(label);
    const RootSystem& rs = alg->roots();
    for (int m = 2; m <= 5; ++m)
      for (const auto& kd : enumerate_kac_diagrams(rs, m)) {
        ThetaGrading gr = grading_from_kac(alg, kd);
        int total = 0;
        for (int d : gr.dims()) total += d;
        CHECK(total == alg->dim());
        for (int a = 0; a < rs.size(); ++a)
          for (int b = 0; b < rs.size(); ++b) {
            int c = rs.sum(a, b);
            if (c >= 0) CHECK(gr.deg[c] == gr.residue(gr.deg[a] + gr.deg[b]));
          }
        // nodes 1..l carry the degrees of the simple roots
        for (int i = 0; i < rs.rank; ++i) CHECK(gr.simple_degrees[i] == kd.labels[i + 1] % m);
      }
  }
}

TEST_CASE("sl4 order-3 grading") {
  ThetaGrading gr = sl4_order3();
  const RootSystem& rs = gr.rs();
  CHECK(gr.dim(0) == 5);
  CHECK(gr.dim(1) == 5);
  CHECK(phi0_type(gr) == "A1");
  CHECK(g1_module_dimensions(gr) == std::vector<int>{2, 2, 1});
  std::set<int> g1(gr.phi1.begin(), gr.phi1.end());
  // e12, e23, e24, e31, e41
  std::set<int> want{root_of(rs, {1, 0, 0}), root_of(rs, {0, 1, 0}), root_of(rs, {0, 1, 1}),
                     root_of(rs, {-1, -1, 0}), root_of(rs, {-1, -1, -1})};
  CHECK(g1 == want);
  CHECK(grading_from_kac(gr.alg, parse_kac("1,1,1,0")).dims() == gr.dims());
}

TEST_CASE("eigenspaces") {
  ThetaGrading gr = sl4_order3();
  AlgebraPtr alg = gr.alg;
  CHECK(eigenspace(gr, alg->zero(), 0, 1).size() == 5);
  CHECK(eigenspace(gr, h_from_wdd(*alg, {2, 2, 2}), 7, 1).empty());

  const RootSystem& rs = gr.rs();
  int e23 = root_of(rs, {0, 1, 0}), e31 = root_of(rs, {-1, -1, 0});
  auto c = completion_data(gr, GradedCandidate{{}, {e23, e31}});
  CHECK(c.flat);
  CHECK(c.psi0.empty());
  CHECK(std::set<int>(c.psi1.begin(), c.psi1.end()) == std::set<int>{e23, e31});
  oracle::SlnRep phi(*alg);
  CHECK(phi(c.h0) == diag({-1, 1, 0, 0}));
  REQUIRE(c.z_basis.size() == 1);
  oracle::Mat z = phi(c.z_basis[0]);
  CHECK(z.scaled(Rational(1) / z(0, 0)) == diag({1, 1, 1, -3}));

  // 2h_0 = diag(-2,2,0,0) has eigenvalue 2 on e23, e24, e31 and e41
  LieElement h = scale(2, c.h0);
  auto v = eigenspace(gr, h, 2, 1);
  CHECK(v.size() == 4);
  std::set<int> support;
  for (const auto& x : v)
    for (int k = 0; k < alg->dim(); ++k)
      if (sgn(x[k])) support.insert(k);
  CHECK(support.count(e23));
  CHECK(support.count(e31));

  auto t = decide_normal(gr, h);
  REQUIRE(t);
  CHECK(is_sl2_triple(*alg, *t));
  CHECK(in_component(gr, t->e, 1));
  CHECK(in_component(gr, t->f, -1));
  // with e restricted to the carrier algebra a triple exists as well
  LieElement e = add(alg->basis(e23), alg->basis(e31));
  std::vector<LieElement> fs;
  for (const auto& y : eigenspace(gr, h, -2, -1)) fs.push_back(y);
  auto t2 = complete_sl2(*alg, h, e, fs);
  REQUIRE(t2);
  oracle::Mat me = phi(t2->e), mf = phi(t2->f), mh = phi(t2->h);
  CHECK(oracle::commutator(mh, me) == me.scaled(2));
  CHECK(oracle::commutator(mh, mf) == mf.scaled(-2));
  CHECK(oracle::commutator(me, mf) == mh);
}

TEST_CASE("candidates and completions") {
  AlgebraPtr a1 = make_algebra("A1");
  ThetaGrading gr = grading_from_kac(a1, parse_kac("1,1"));
  auto cands = candidate_pi_systems(gr);
  std::set<std::pair<std::vector<int>, std::vector<int>>> got;
  for (const auto& c : cands) got.emplace(c.pi0, c.pi1);
  CHECK(got == std::set<std::pair<std::vector<int>, std::vector<int>>>{{{}, {}}, {{}, {0}}, {{}, {1}}});
  auto one = completion(gr, GradedCandidate{{}, {0}});
  REQUIRE(one);
  CHECK(a1->root_value(one->h0, 0) == 1);

  ThetaGrading ex = sl4_order3();
  const RootSystem& rs = ex.rs();
  std::vector<int> want{root_of(rs, {0, 1, 0}), root_of(rs, {-1, -1, 0})};
  std::sort(want.begin(), want.end());
  Method2Stats st;
  auto exc = candidate_pi_systems(ex, &st);
  bool found_empty = false, found_carrier = false;
  for (const auto& c : exc) {
    found_empty = found_empty || c.all().empty();
    // the carrier basis up to W_0 = <s_3>, which fixes both roots
    found_carrier = found_carrier || (c.pi0.empty() && c.all() == want);
  }
  CHECK(found_empty);
  CHECK(found_carrier);
  CHECK(st.candidates == exc.size());

  // some G2 order-2 candidate is not flat
  AlgebraPtr g2 = make_algebra("G2");
  ThetaGrading gg = grading_from_kac(g2, parse_kac("0,0,1"));
  int not_flat = 0;
  for (const auto& c : candidate_pi_systems(gg)) {
    if (c.all().empty()) continue;
    auto d = completion_data(gg, c);
    CHECK(d.flat == completion(gg, c).has_value());
    not_flat += !d.flat;
  }
  CHECK(not_flat > 0);
}

TEST_CASE("nilpotent orbits of g in type A match partitions") {
  std::map<std::string, int> n{{"A1", 2}, {"A2", 3}, {"A3", 4}, {"A4", 5}};
  for (const auto& [label, size] : n) {
    AlgebraPtr alg = make_algebra(label);
    auto chars = classify_nilpotent_g(*alg);
    std::set<IntVec> got, want;
    for (const auto& c : chars) got.insert(c.wdd);
    for (const auto& p : oracle::partitions(size)) want.insert(oracle::partition_wdd(p));
    CHECK(chars.size() == want.size());
    CHECK(got == want);
    CHECK(std::all_of(chars[0].wdd.begin(), chars[0].wdd.end(), [](int x) { return x == 0; }));
  }
  CHECK(classify_nilpotent_g(*make_algebra("G2")).size() == 5);
  CHECK(classify_nilpotent_g(*make_algebra("F4")).size() == 16);
  CHECK(classify_nilpotent_g(*make_algebra("E6")).size() == 21);
}

TEST_CASE("decide_normal and normal_list on sl2") {
  AlgebraPtr a1 = make_algebra("A1");
  ThetaGrading gr = grading_from_kac(a1, parse_kac("1,1"));
  CHECK_FALSE(decide_normal(gr, a1->zero()));
  LieElement h = a1->basis(a1->cartan_index(0));
  auto t = decide_normal(gr, h);
  REQUIRE(t);
  CHECK(is_sl2_triple(*a1, *t));
  CHECK(sgn(t->e[0]) != 0);
  CHECK(is_zero(sub(t->e, scale(t->e[0], a1->basis(0)))));
  auto words = coset_words(gr.rs(), WeylSubgroup{gr.delta0}).words;
  CHECK(words.size() == 2);
  CHECK(normal_list(gr, words, h).size() == 2);

  ThetaGrading triv = grading_from_kac(a1, parse_kac("1,0"));
  CHECK(normal_list(triv, coset_words(triv.rs(), WeylSubgroup{triv.delta0}).words, h).size() <= 1);
}

TEST_CASE("orbits of sl2 with labels (1,1)") {
  AlgebraPtr a1 = make_algebra("A1");
  ThetaGrading gr = grading_from_kac(a1, parse_kac("1,1"));
  auto r1 = classify(gr, Method::One);
  auto r2 = classify(gr, Method::Two);
  REQUIRE(r1.records.size() == 3);
  CHECK(h_set(r1.records) == h_set(r2.records));
  CHECK(h_set(r1.records) == std::set<Weight>{{0}, {2}, {-2}});
  CHECK(r1.records[0].dim == 0);
  CHECK(r1.records[1].dim == 1);
  CHECK(orbit_dimension(gr, a1->basis(0)) == 1);
  CHECK(orbit_dimension(gr, a1->zero()) == 0);
  auto s = summarize(gr, r1.records);
  CHECK(s.orbit_count == 2);
  CHECK(s.component_count == 2);
  CHECK(s.component_dim == 1);
  CHECK(s.rank == 1);
  CHECK(s.nregular);
  CHECK(s.very_nregular);
}

TEST_CASE("orbits of type A gradings against the matrix model") {
  for (const char* label : {"A2", "A3"}) {
    AlgebraPtr alg = make_algebra(label);
    oracle::SlnRep phi(*alg);
    for (int m = 2; m <= 4; ++m)
      for (const auto& kd : enumerate_kac_diagrams(alg->roots(), m)) {
        ThetaGrading gr = grading_from_kac(alg, kd);
        auto c1 = classify(gr, Method::One);
        auto c2 = classify(gr, Method::Two);
        CHECK(h_set(c1.records) == h_set(c2.records));
        CHECK(h_set(c1.records).size() == c1.records.size());
        for (const auto& r : c1.records) {
          if (is_zero(r.triple.e)) continue;
          CHECK(is_sl2_triple(*alg, r.triple));
          CHECK(in_component(gr, r.triple.e, 1));
          CHECK(in_component(gr, r.triple.f, -1));
          oracle::Mat e = phi(r.triple.e);
          REQUIRE(oracle::nilpotent(e));
          CHECK(r.wdd == oracle::partition_wdd(oracle::jordan_type(e)));
          CHECK(r.wdd == ambient_wdd(*alg, r.triple));
          // dim [g_0, e] from matrices
          const auto& g0 = gr.component_bases[0];
          RatMatrix img(g0.size(), e.n * e.n);
          for (std::size_t i = 0; i < g0.size(); ++i) {
            oracle::Mat b = oracle::commutator(phi.basis[g0[i]], e);
            for (int k = 0; k < e.n * e.n; ++k) img(i, k) = b.a[k];
          }
          CHECK(static_cast<int>(rank(img)) == r.dim);
        }
      }
  }
}

TEST_CASE("ambient diagrams") {
  AlgebraPtr a2 = make_algebra("A2");
  CHECK(ambient_wdd(a2->roots(), Weight{0, 0}) == IntVec{0, 0});
  CHECK(ambient_wdd(a2->roots(), Weight{-2, -2}) == IntVec{2, 2});
  // minimal orbit of sl_3: e = x_{alpha_1}
  auto t = complete_sl2(*a2, a2->basis(a2->cartan_index(0)), a2->basis(0), {a2->basis(a2->roots().neg(0))});
  REQUIRE(t);
  CHECK(ambient_wdd(*a2, *t) == IntVec{1, 1});
}

TEST_CASE("principal gradings") {
  for (const char* label : {"G2", "F4", "B3", "A3"}) {
    AlgebraPtr alg = make_algebra(label);
    const RootSystem& rs = alg->roots();
    for (int m = 2; m <= 8; ++m) {
      ThetaGrading p = principal_nregular_grading(alg, m);
      ThetaGrading k = grading_from_kac(alg, principal_kac_diagram(rs, m));
      CHECK(p.dims() == k.dims());
      for (int i = 0; i < rs.rank; ++i) CHECK(p.deg[i] == 1 % m);
    }
  }
  CHECK(principal_nregular_grading(make_algebra("G2"), 2).dims() == std::vector<int>{6, 8});
}

TEST_CASE("small survey rows") {
  AlgebraPtr g2 = make_algebra("G2");
  auto r2 = nregular_survey(g2, 2, Method::Auto, {}, true);
  CHECK(r2.kac == KacDiagram{{0, 0, 1}});
  CHECK(r2.result.records.size() == 6);
  auto s = r2.summary;
  CHECK(s.orbit_count == 5);
  CHECK(s.component_count == 1);
  CHECK(s.component_dim == 6);
  CHECK(s.rank == 2);
  CHECK(s.very_nregular);
  auto s3 = nregular_survey(g2, 3).summary;
  CHECK(s3.orbit_count == 6);
  CHECK(s3.component_count == 2);
  CHECK_FALSE(s3.very_nregular);
  auto s5 = nregular_survey(g2, 5).summary;
  CHECK((s5.orbit_count == 3 && s5.component_count == 1 && s5.component_dim == 3 && s5.rank == 0));

  // the regular orbit meets g_1 of the order-2 N-regular grading once
  ThetaGrading gr = grading_from_kac(g2, parse_kac("0,0,1"));
  auto words = coset_words(gr.rs(), WeylSubgroup{gr.delta0}).words;
  CHECK(normal_list(gr, words, h_from_wdd(*g2, {2, 2})).size() == 1);
}

TEST_CASE("method heuristic and parsing") {
  CHECK(parse_method("auto") == Method::Auto);
  CHECK(parse_method("1") == Method::One);
  CHECK(parse_method("II") == Method::Two);
  CHECK_THROWS_AS(parse_method("3"), std::invalid_argument);
  AlgebraPtr e8 = make_algebra("E8");
  CHECK(choose_method(grading_from_kac(e8, parse_kac("1,1,1,1,1,1,1,1,1"))) == Method::Two);
  CHECK(choose_method(grading_from_kac(make_algebra("G2"), parse_kac("0,0,1"))) == Method::One);
}

TEST_CASE("retry budget") {
  ThetaGrading gr = sl4_order3();
  RunOptions opt;
  opt.omega_cap = 0;
  auto c = completion_data(gr, GradedCandidate{{}, {root_of(gr.rs(), {0, 1, 0}), root_of(gr.rs(), {-1, -1, 0})}});
  CHECK_THROWS_AS(decide_normal(gr, scale(2, c.h0), opt), RetryBudgetExceeded);
}
