#include "thetanil/nullcone.hpp"

#include "thetanil/parallel.hpp"

#include <algorithm>
#include <set>

namespace thetanil {

int orbit_dimension(const ThetaGrading& gr, const LieElement& e) {
  const ChevalleyAlgebra& alg = *gr.alg;
  if (is_zero(e)) return 0;
  const auto& g0 = gr.component_bases[0];
  const auto& g1 = gr.component_bases[gr.residue(1)];
  std::vector<int> row(alg.dim(), -1);
  for (std::size_t k = 0; k < g1.size(); ++k) row[g1[k]] = static_cast<int>(k);

  Integer scale = lcm_of_denominators(e);
  std::vector<std::pair<int, Integer>> terms;
  for (int k = 0; k < alg.dim(); ++k) {
    if (!sgn(e[k])) continue;
    if (row[k] < 0) throw std::invalid_argument("orbit_dimension: e is not in g_1");
    terms.emplace_back(k, Integer(e[k] * scale));
  }
  bool small = std::all_of(terms.begin(), terms.end(), [](const auto& t) { return t.second.fits_slong_p(); });
  if (small) {
    IntMatrix a(g1.size(), g0.size());
    for (std::size_t c = 0; c < g0.size(); ++c)
      for (const auto& [k, coef] : terms)
        for (const auto& [idx, n] : alg.basis_bracket(g0[c], k)) a(row[idx], c) += coef.get_si() * n;
    return static_cast<int>(exact_rank(a));
  }
  RatMatrix a(g1.size(), g0.size());
  for (std::size_t c = 0; c < g0.size(); ++c)
    for (const auto& [k, coef] : terms)
      for (const auto& [idx, n] : alg.basis_bracket(g0[c], k)) a(row[idx], c) += coef * n;
  return static_cast<int>(rank(a));
}

WeightedDynkinDiagram ambient_wdd(const RootSystem& rs, const Weight& h_values) {
  auto [dom, path] = subdominant_path(rs, WeylSubgroup::full(rs).basis, h_values);
  WeightedDynkinDiagram d(dom.begin(), dom.end());
  for (int x : d)
    if (x < 0 || x > 2) throw std::logic_error("ambient_wdd: h is not a characteristic");
  return d;
}

WeightedDynkinDiagram ambient_wdd(const ChevalleyAlgebra& alg, const Sl2Triple& t) {
  RatVec v = alg.cartan_values(t.h);
  Weight w(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].get_den() != 1) throw std::logic_error("ambient_wdd: h is not a characteristic");
    w[i] = v[i].get_num().get_si();
  }
  return ambient_wdd(alg.roots(), w);
}

void annotate(const ThetaGrading& gr, std::vector<OrbitRecord>& records, int threads) {
  parallel_for(records.size(), threads, [&](std::size_t i) {
    auto& r = records[i];
    r.dim = orbit_dimension(gr, r.triple.e);
    WeightedDynkinDiagram d = ambient_wdd(gr.rs(), r.h_values);
    if (!r.wdd.empty() && r.wdd != d) throw std::logic_error("annotate: recorded diagram disagrees with h");
    r.wdd = d;
  });
}

NullconeSummary summarize(const ThetaGrading& gr, const std::vector<OrbitRecord>& records) {
  NullconeSummary s;
  for (const auto& r : records) {
    if (!is_zero(r.triple.e)) ++s.orbit_count;
    if (r.dim < 0) throw std::invalid_argument("summarize: records are not annotated");
    s.component_dim = std::max(s.component_dim, r.dim);
  }
  const WeightedDynkinDiagram* first = nullptr;
  bool same = true;
  for (const auto& r : records) {
    if (r.dim != s.component_dim) continue;
    ++s.component_count;
    if (!first)
      first = &r.wdd;
    else if (r.wdd != *first)
      same = false;
  }
  s.rank = gr.dim(1) - s.component_dim;
  for (const auto& r : records)
    if (!r.wdd.empty() && std::all_of(r.wdd.begin(), r.wdd.end(), [](int x) { return x == 2; })) s.nregular = true;
  s.very_nregular = s.nregular && same;
  return s;
}

Method parse_method(const std::string& s) {
  if (s == "auto") return Method::Auto;
  if (s == "1" || s == "I") return Method::One;
  if (s == "2" || s == "II") return Method::Two;
  throw std::invalid_argument("method must be auto, 1 or 2");
}

Method choose_method(const ThetaGrading& gr) {
  Integer index = weyl_group_order(gr.rs(), WeylSubgroup::full(gr.rs()).basis) / weyl_group_order(gr.rs(), gr.delta0);
  return index <= 5000 ? Method::One : Method::Two;
}

Classification classify(const ThetaGrading& gr, Method method, const RunOptions& opt) {
  Classification c;
  c.used = method == Method::Auto ? choose_method(gr) : method;
  c.records = c.used == Method::One ? method1(gr, opt, &c.stats1) : method2(gr, opt, &c.stats2);
  annotate(gr, c.records, opt.threads);
  return c;
}

SurveyRow nregular_survey(const AlgebraPtr& alg, int m, Method method, const RunOptions& opt, bool exhaustive) {
  const RootSystem& rs = alg->roots();
  auto diagrams = enumerate_kac_diagrams(rs, m, true);
  const KacDiagram expected = principal_kac_diagram(rs, m);
  std::vector<std::size_t> winners;
  std::vector<SurveyRow> rows(diagrams.size());
  if (exhaustive) {
    for (std::size_t i = 0; i < diagrams.size(); ++i) {
      SurveyRow& r = rows[i];
      r.m = m;
      r.kac = diagrams[i];
      r.grading = grading_from_kac(alg, diagrams[i]);
      r.result = classify(r.grading, method, opt);
      r.summary = summarize(r.grading, r.result.records);
      if (r.summary.nregular) winners.push_back(i);
    }
  } else {
    for (std::size_t i = 0; i < diagrams.size(); ++i)
      if (diagrams[i] == expected) winners.push_back(i);
  }
  if (winners.size() != 1)
    throw std::logic_error("nregular_survey: found " + std::to_string(winners.size()) + " N-regular diagrams of order " +
                           std::to_string(m) + " for " + rs.label());
  if (diagrams[winners[0]] != expected)
    throw std::logic_error("nregular_survey: N-regular diagram differs from the principal one");
  if (exhaustive) return std::move(rows[winners[0]]);
  SurveyRow row;
  row.m = m;
  row.kac = expected;
  row.grading = grading_from_kac(alg, expected);
  row.result = classify(row.grading, method, opt);
  row.summary = summarize(row.grading, row.result.records);
  if (!row.summary.nregular) throw std::logic_error("nregular_survey: classification misses the regular orbit");
  return row;
}

}  // namespace thetanil
