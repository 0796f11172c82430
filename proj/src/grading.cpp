#include "thetanil/grading.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace thetanil {

AlgebraPtr make_algebra(const std::string& label) { return std::make_shared<ChevalleyAlgebra>(build_root_system(label)); }

AlgebraPtr make_algebra(const RootSystem& rs) { return std::make_shared<ChevalleyAlgebra>(rs); }

int KacDiagram::order(const RootSystem& rs) const {
  if (static_cast<int>(labels.size()) != rs.rank + 1)
    throw std::invalid_argument("Kac diagram for " + rs.label() + " needs " + std::to_string(rs.rank + 1) +
                                " labels, got " + std::to_string(labels.size()));
  int m = 0;
  for (int i = 0; i <= rs.rank; ++i) {
    if (labels[i] < 0) throw std::invalid_argument("Kac labels must be nonnegative");
    m += rs.marks[i] * labels[i];
  }
  return m;
}

KacDiagram parse_kac(const std::string& text) {
  KacDiagram kd;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad Kac label '" + tok + "'");
    }
    if (used != tok.size() || v < 0) throw std::invalid_argument("bad Kac label '" + tok + "'");
    kd.labels.push_back(v);
  }
  return kd;
}

std::string to_string(const KacDiagram& kd) {
  std::string s;
  for (std::size_t i = 0; i < kd.labels.size(); ++i) s += (i ? "," : "") + std::to_string(kd.labels[i]);
  return s;
}

std::vector<int> ThetaGrading::dims() const {
  std::vector<int> d;
  for (const auto& b : component_bases) d.push_back(static_cast<int>(b.size()));
  return d;
}

ThetaGrading grading_from_degrees(const AlgebraPtr& alg, const IntVec& degrees, int m) {
  const RootSystem& rs = alg->roots();
  if (m < 1) throw std::invalid_argument("grading order must be positive");
  if (static_cast<int>(degrees.size()) != rs.rank) throw std::invalid_argument("need one degree per simple root");
  ThetaGrading g;
  g.alg = alg;
  g.m = m;
  for (int d : degrees) g.simple_degrees.push_back(g.residue(d));
  g.deg.resize(rs.size());
  g.component_bases.assign(m, {});
  for (int r = 0; r < rs.size(); ++r) {
    long long d = 0;
    for (int i = 0; i < rs.rank; ++i) d += static_cast<long long>(rs.roots[r][i]) * g.simple_degrees[i];
    g.deg[r] = g.residue(d);
    g.component_bases[g.deg[r]].push_back(alg->root_index(r));
    if (g.deg[r] == 0) g.phi0.push_back(r);
    if (g.deg[r] == g.residue(1)) g.phi1.push_back(r);
  }
  for (int i = 0; i < rs.rank; ++i) g.component_bases[0].push_back(alg->cartan_index(i));
  g.delta0 = simple_system(rs, g.phi0);
  for (int a : g.delta0) g.semisimple_part_cartan.push_back(alg->cartan_element(alg->coroot(a)));
  RatMatrix cond(g.delta0.size(), rs.rank);
  for (std::size_t k = 0; k < g.delta0.size(); ++k)
    for (int j = 0; j < rs.rank; ++j) cond(k, j) = rs.pair(g.delta0[k], j);
  if (g.delta0.empty()) {
    for (int j = 0; j < rs.rank; ++j) {
      RatVec e(rs.rank);
      e[j] = 1;
      g.center_basis.push_back(alg->cartan_element(e));
    }
  } else {
    for (const auto& v : kernel(cond)) g.center_basis.push_back(alg->cartan_element(v));
  }
  return g;
}

ThetaGrading grading_from_kac(const AlgebraPtr& alg, const KacDiagram& kd) {
  const RootSystem& rs = alg->roots();
  const int m = kd.order(rs);
  if (m == 0) throw std::invalid_argument("all Kac labels are zero (order 0)");
  IntVec degrees(kd.labels.begin() + 1, kd.labels.end());
  ThetaGrading g = grading_from_degrees(alg, degrees, m);
  g.kac = kd;
  return g;
}

std::vector<LieElement> eigenspace(const ThetaGrading& gr, const LieElement& h, const Rational& k, int i) {
  const ChevalleyAlgebra& alg = *gr.alg;
  const auto& basis = gr.component_bases[gr.residue(i)];
  bool in_cartan = true;
  for (int r = 0; r < alg.roots().size(); ++r)
    if (sgn(h[r])) in_cartan = false;
  std::vector<LieElement> out;
  if (in_cartan) {
    for (int b : basis) {
      Rational ev = alg.is_cartan_index(b) ? Rational(0) : alg.root_value(h, b);
      if (ev == k) out.push_back(alg.basis(b));
    }
    return out;
  }
  std::vector<LieElement> dom;
  for (int b : basis) dom.push_back(alg.basis(b));
  RatMatrix a = ad_matrix(alg, h, dom, dom);
  for (std::size_t d = 0; d < dom.size(); ++d) a(d, d) -= k;
  for (const auto& v : kernel(a)) {
    LieElement x = alg.zero();
    for (std::size_t d = 0; d < dom.size(); ++d)
      if (sgn(v[d])) x[basis[d]] = v[d];
    out.push_back(x);
  }
  return out;
}

std::vector<IntVec> extended_diagram_automorphisms(const RootSystem& rs) {
  const int n = rs.rank + 1;
  std::vector<int> node(n);
  node[0] = rs.neg(rs.npos - 1);  // -theta
  for (int i = 1; i < n; ++i) node[i] = i - 1;
  auto entry = [&](int i, int j) { return rs.pair(node[i], node[j]); };
  std::vector<IntVec> out;
  IntVec perm(n, -1);
  std::vector<char> used(n, 0);
  auto rec = [&](auto&& self, int i) -> void {
    if (i == n) {
      out.push_back(perm);
      return;
    }
    for (int t = 0; t < n; ++t) {
      if (used[t] || rs.marks[t] != rs.marks[i] || rs.norm2(node[t]) != rs.norm2(node[i])) continue;
      bool ok = true;
      for (int j = 0; j < i && ok; ++j) ok = entry(i, j) == entry(t, perm[j]) && entry(j, i) == entry(perm[j], t);
      if (!ok) continue;
      used[t] = 1;
      perm[i] = t;
      self(self, i + 1);
      used[t] = 0;
    }
  };
  rec(rec, 0);
  return out;
}

namespace {

IntVec canonical_labels(const std::vector<IntVec>& autos, const IntVec& s) {
  IntVec best = s;
  for (const auto& p : autos) {
    IntVec img(s.size());
    for (std::size_t k = 0; k < s.size(); ++k) img[p[k]] = s[k];
    best = std::max(best, img);
  }
  return best;
}

}  // namespace

KacDiagram canonical_kac(const RootSystem& rs, const KacDiagram& kd) {
  kd.order(rs);
  return KacDiagram{canonical_labels(extended_diagram_automorphisms(rs), kd.labels)};
}

KacDiagram principal_kac_diagram(const RootSystem& rs, int m) {
  if (m < 1) throw std::invalid_argument("order must be positive");
  const int l = rs.rank;
  const int theta = rs.npos - 1;
  // v_i = m alpha_i(x).
  std::vector<long long> v(l, 1);
  auto value = [&](int r) {
    long long s = 0;
    for (int i = 0; i < l; ++i) s += static_cast<long long>(rs.roots[r][i]) * v[i];
    return s;
  };
  for (bool moved = true; moved;) {
    moved = false;
    for (int i = 0; i < l; ++i) {
      if (v[i] >= 0) continue;
      const long long c = v[i];
      for (int j = 0; j < l; ++j) v[j] -= c * rs.pair(j, i);
      moved = true;
    }
    const long long t = value(theta);
    if (t > m) {
      for (int j = 0; j < l; ++j) v[j] -= (t - m) * rs.pair(j, theta);
      moved = true;
    }
  }
  IntVec labels(l + 1);
  labels[0] = static_cast<int>(m - value(theta));
  for (int i = 0; i < l; ++i) labels[i + 1] = static_cast<int>(v[i]);
  return canonical_kac(rs, KacDiagram{labels});
}

std::vector<KacDiagram> enumerate_kac_diagrams(const RootSystem& rs, int m, bool primitive_only) {
  if (m < 1) throw std::invalid_argument("order must be positive");
  const int n = rs.rank + 1;
  auto autos = extended_diagram_automorphisms(rs);
  std::set<IntVec> reps;
  IntVec s(n, 0);
  auto rec = [&](auto&& self, int i, int left) -> void {
    if (i == n) {
      if (left != 0) return;
      if (primitive_only) {
        int g = 0;
        for (int x : s) g = std::gcd(g, x);
        if (g != 1) return;
      }
      reps.insert(canonical_labels(autos, s));
      return;
    }
    for (int v = 0; v * rs.marks[i] <= left; ++v) {
      s[i] = v;
      self(self, i + 1, left - v * rs.marks[i]);
    }
    s[i] = 0;
  };
  rec(rec, 0, m);
  std::vector<KacDiagram> out;
  for (auto it = reps.rbegin(); it != reps.rend(); ++it) out.push_back(KacDiagram{*it});
  return out;
}

ThetaGrading principal_nregular_grading(const AlgebraPtr& alg, int m) {
  if (m < 2) throw std::invalid_argument("principal grading needs m >= 2");
  return grading_from_degrees(alg, IntVec(alg->rank(), 1), m);
}

std::vector<int> g1_module_dimensions(const ThetaGrading& gr) {
  const RootSystem& rs = gr.rs();
  std::vector<char> in1(rs.size(), 0), in0(rs.size(), 0);
  for (int r : gr.phi1) in1[r] = 1;
  for (int r : gr.phi0) in0[r] = 1;
  std::vector<char> done(rs.size(), 0);
  std::vector<int> dims;
  for (int start : gr.phi1) {
    if (done[start]) continue;
    int size = 0;
    std::deque<int> q{start};
    done[start] = 1;
    while (!q.empty()) {
      int a = q.front();
      q.pop_front();
      ++size;
      for (int b : gr.phi0) {
        int c = rs.sum(a, b);
        if (c >= 0 && in1[c] && !done[c]) {
          done[c] = 1;
          q.push_back(c);
        }
      }
    }
    dims.push_back(size);
  }
  std::sort(dims.rbegin(), dims.rend());
  return dims;
}

std::string phi0_type(const ThetaGrading& gr) { return dynkin_type(gr.rs(), gr.delta0); }

}  // namespace thetanil
