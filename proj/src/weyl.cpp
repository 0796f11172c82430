#include "thetanil/weyl.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

namespace thetanil {

Weight root_weight(const RootSystem& rs, int r) {
  Weight w(rs.rank, 0);
  for (int j = 0; j < rs.rank; ++j) w[j] = rs.inner(j, r);
  return w;
}

std::int64_t root_value(const RootSystem& rs, const Weight& lambda, int beta) {
  std::int64_t s = 0;
  const IntVec& k = rs.roots[beta];
  for (int j = 0; j < rs.rank; ++j)
    if (k[j]) s += k[j] * lambda[j];
  return s;
}

void reflect_weight_inplace(const RootSystem& rs, int beta, Weight& lambda) {
  const std::int64_t t = root_value(rs, lambda, beta);
  if (t == 0) return;
  for (int j = 0; j < rs.rank; ++j) lambda[j] -= t * rs.pair(j, beta);
}

Weight reflect_weight(const RootSystem& rs, int beta, const Weight& lambda) {
  Weight w = lambda;
  reflect_weight_inplace(rs, beta, w);
  return w;
}

std::pair<Weight, Integer> weight_from_coords(const RootSystem& rs, const RatVec& coords) {
  RatVec p(rs.rank);
  for (int j = 0; j < rs.rank; ++j)
    for (int k = 0; k < rs.rank; ++k)
      if (rs.form[j][k]) p[j] += coords[k] * rs.form[j][k];
  Integer scale = lcm_of_denominators(p);
  Weight w(rs.rank);
  for (int j = 0; j < rs.rank; ++j) {
    Rational v = p[j] * scale;
    v.canonicalize();
    if (!v.get_num().fits_slong_p()) throw std::overflow_error("weight too large");
    w[j] = v.get_num().get_si();
  }
  return {w, scale};
}

WeylElement::WeylElement(const RootSystem& rs) : perm_(rs.size()), npos_(rs.npos) {
  std::iota(perm_.begin(), perm_.end(), 0);
}

WeylElement WeylElement::from_word(const RootSystem& rs, const std::vector<int>& word) {
  WeylElement w(rs);
  w.word_ = word;
  for (int x = 0; x < rs.size(); ++x) {
    int y = x;
    for (auto it = word.rbegin(); it != word.rend(); ++it) y = rs.reflect(*it, y);
    w.perm_[x] = y;
  }
  return w;
}

WeylElement WeylElement::from_reflections(const RootSystem& rs, const std::vector<int>& refl) {
  WeylElement w(rs);
  for (auto it = refl.rbegin(); it != refl.rend(); ++it) {
    const int r = rs.positive(*it) ? *it : rs.neg(*it);
    const auto& rw = rs.reflection_words[r];
    w.word_.insert(w.word_.end(), rw.begin(), rw.end());
  }
  for (int x = 0; x < rs.size(); ++x) {
    int y = x;
    for (int r : refl) y = rs.reflect(r, y);
    w.perm_[x] = y;
  }
  return w;
}

Weight WeylElement::apply(const RootSystem& rs, const Weight& lambda) const {
  return apply_word(rs, word_, lambda);
}

WeylElement WeylElement::operator*(const WeylElement& o) const {
  WeylElement w;
  w.npos_ = npos_;
  w.word_ = word_;
  w.word_.insert(w.word_.end(), o.word_.begin(), o.word_.end());
  w.perm_.resize(perm_.size());
  for (std::size_t x = 0; x < perm_.size(); ++x) w.perm_[x] = perm_[o.perm_[x]];
  return w;
}

WeylElement WeylElement::inverse() const {
  WeylElement w;
  w.npos_ = npos_;
  w.word_.assign(word_.rbegin(), word_.rend());
  w.perm_.resize(perm_.size());
  for (std::size_t x = 0; x < perm_.size(); ++x) w.perm_[perm_[x]] = static_cast<int>(x);
  return w;
}

std::int64_t length(const RootSystem&, const WeylElement& w) {
  std::int64_t n = 0;
  for (int x = 0; x < w.npos_; ++x)
    if (w.perm_[x] >= w.npos_) ++n;
  return n;
}

const std::vector<int>& reflection_word(const RootSystem& rs, int r) {
  return rs.reflection_words[rs.positive(r) ? r : rs.neg(r)];
}

WeylSubgroup WeylSubgroup::full(const RootSystem& rs) {
  WeylSubgroup s;
  for (int i = 0; i < rs.rank; ++i) s.basis.push_back(i);
  return s;
}

WeylSubgroup WeylSubgroup::generated_by(const RootSystem& rs, const std::vector<int>& roots) {
  WeylSubgroup s;
  if (!roots.empty()) s.basis = simple_system(rs, reflection_closure(rs, roots));
  return s;
}

Weight apply_word(const RootSystem& rs, const std::vector<int>& word, const Weight& lambda) {
  Weight w = lambda;
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    const int i = *it;
    const std::int64_t t = w[i];
    if (t == 0) continue;
    for (int j = 0; j < rs.rank; ++j) w[j] -= t * rs.cartan[j][i];
  }
  return w;
}

namespace {

struct VecHash {
  std::size_t operator()(const std::vector<int>& v) const noexcept {
    std::size_t h = 1469598103934665603ULL;
    for (int x : v) h = (h ^ static_cast<std::size_t>(x)) * 1099511628211ULL;
    return h;
  }
};

}  // namespace

CosetReps coset_words(const RootSystem& rs, const WeylSubgroup& sub) {
  for (int b : sub.basis)
    if (!rs.positive(b)) throw std::invalid_argument("Weyl subgroup basis must consist of positive roots");
  const int n = rs.size(), l = rs.rank;
  struct Node {
    std::vector<int> perm;   // w on all roots
    std::vector<int> inv;    // w^{-1}(beta_j)
    int word_index;
  };
  CosetReps out;
  std::vector<Node> level(1);
  level[0].perm.resize(n);
  std::iota(level[0].perm.begin(), level[0].perm.end(), 0);
  level[0].inv = sub.basis;
  level[0].word_index = 0;
  out.words.emplace_back();
  out.per_level.push_back(1);
  while (!level.empty()) {
    std::vector<Node> next;
    std::unordered_map<std::vector<int>, int, VecHash> seen;
    for (const Node& w : level) {
      for (int i = 0; i < l; ++i) {
        if (!rs.positive(w.perm[i])) continue;  // need l(w s_i) > l(w)
        bool ok = true;
        std::vector<int> inv(w.inv.size());
        for (std::size_t j = 0; j < w.inv.size() && ok; ++j) {
          inv[j] = rs.reflect(i, w.inv[j]);
          ok = rs.positive(inv[j]);
        }
        if (!ok) continue;
        std::vector<int> key(l);
        for (int k = 0; k < l; ++k) key[k] = w.perm[rs.reflect(i, k)];
        if (!seen.emplace(key, static_cast<int>(next.size())).second) continue;
        Node u;
        u.perm.resize(n);
        for (int x = 0; x < n; ++x) u.perm[x] = w.perm[rs.reflect(i, x)];
        u.inv = std::move(inv);
        std::vector<int> word = out.words[w.word_index];
        word.push_back(i);
        u.word_index = static_cast<int>(out.words.size());
        out.words.push_back(std::move(word));
        next.push_back(std::move(u));
      }
    }
    if (!next.empty()) out.per_level.push_back(static_cast<std::int64_t>(next.size()));
    level = std::move(next);
  }
  return out;
}

std::vector<WeylElement> shortest_coset_reps(const RootSystem& rs, const WeylSubgroup& sub) {
  auto reps = coset_words(rs, sub);
  std::vector<WeylElement> out;
  out.reserve(reps.words.size());
  for (const auto& w : reps.words) out.push_back(WeylElement::from_word(rs, w));
  return out;
}

std::pair<Weight, std::vector<int>> subdominant_path(const RootSystem& rs, const std::vector<int>& basis,
                                                     const Weight& mu) {
  Weight lambda = mu;
  std::vector<int> path;
  while (true) {
    int hit = -1;
    for (std::size_t i = 0; i < basis.size(); ++i)
      if (root_value(rs, lambda, basis[i]) < 0) {
        hit = basis[i];
        break;
      }
    if (hit < 0) break;
    reflect_weight_inplace(rs, hit, lambda);
    path.push_back(hit);
  }
  return {lambda, path};
}

std::pair<Weight, WeylElement> to_subdominant(const RootSystem& rs, const WeylSubgroup& sub, const Weight& mu) {
  auto [lambda, path] = subdominant_path(rs, sub.basis, mu);
  return {lambda, WeylElement::from_reflections(rs, path)};
}

std::vector<int> stabilizer_generators(const RootSystem& rs, const WeylSubgroup& sub, const Weight& lambda) {
  auto [dom, path] = subdominant_path(rs, sub.basis, lambda);
  std::vector<int> gens;
  for (int b : sub.basis) {
    if (root_value(rs, dom, b) != 0) continue;
    // v^{-1}(b), with v = the reflections in path applied in order.
    int g = b;
    for (auto it = path.rbegin(); it != path.rend(); ++it) g = rs.reflect(*it, g);
    gens.push_back(g);
  }
  if (gens.empty()) return gens;
  return simple_system(rs, reflection_closure(rs, gens));
}

std::optional<WeylElement> conjugate_tuples(const RootSystem& rs, const WeylSubgroup& sub,
                                            const std::vector<Weight>& mu, const std::vector<Weight>& lambda) {
  if (mu.size() != lambda.size()) throw std::invalid_argument("conjugate_tuples: tuples differ in length");
  std::vector<Weight> m = mu, t = lambda;
  std::vector<int> basis = sub.basis, u_path, v_path;
  for (std::size_t k = 0; k < m.size(); ++k) {
    auto [a, pa] = subdominant_path(rs, basis, m[k]);
    auto [b, pb] = subdominant_path(rs, basis, t[k]);
    if (a != b) return std::nullopt;
    for (std::size_t j = k + 1; j < m.size(); ++j) {
      for (int r : pa) reflect_weight_inplace(rs, r, m[j]);
      for (int r : pb) reflect_weight_inplace(rs, r, t[j]);
    }
    u_path.insert(u_path.end(), pa.begin(), pa.end());
    v_path.insert(v_path.end(), pb.begin(), pb.end());
    std::vector<int> keep;
    for (int beta : basis)
      if (root_value(rs, a, beta) == 0) keep.push_back(beta);
    basis = std::move(keep);
  }
  u_path.insert(u_path.end(), v_path.rbegin(), v_path.rend());
  return WeylElement::from_reflections(rs, u_path);
}

namespace {

struct SetSearch {
  const RootSystem& rs;
  std::vector<int> a, b;      // sorted root lists
  std::vector<int> ca, cb;    // colors
  std::vector<int> match;     // a[k] -> index into b
  std::vector<char> used;
  std::vector<int> u_path, v_path;

  bool run(std::size_t k, const std::vector<int>& basis, const std::vector<Weight>& ma,
           const std::vector<Weight>& mb) {
    if (k == a.size()) return true;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (used[j] || ca[k] != cb[j] || rs.norm2(a[k]) != rs.norm2(b[j])) continue;
      bool gram = true;
      for (std::size_t i = 0; i < k && gram; ++i) gram = rs.inner(a[i], a[k]) == rs.inner(b[match[i]], b[j]);
      if (!gram) continue;
      auto [x, px] = subdominant_path(rs, basis, ma[k]);
      auto [y, py] = subdominant_path(rs, basis, mb[j]);
      if (x != y) continue;
      std::vector<Weight> na = ma, nb = mb;
      for (auto& w : na)
        for (int r : px) reflect_weight_inplace(rs, r, w);
      for (auto& w : nb)
        for (int r : py) reflect_weight_inplace(rs, r, w);
      std::vector<int> keep;
      for (int beta : basis)
        if (root_value(rs, x, beta) == 0) keep.push_back(beta);
      used[j] = 1;
      match[k] = static_cast<int>(j);
      const std::size_t us = u_path.size(), vs = v_path.size();
      u_path.insert(u_path.end(), px.begin(), px.end());
      v_path.insert(v_path.end(), py.begin(), py.end());
      if (run(k + 1, keep, na, nb)) return true;
      u_path.resize(us);
      v_path.resize(vs);
      used[j] = 0;
    }
    return false;
  }
};

bool prepare(const RootSystem& rs, const std::vector<int>& g1, const std::vector<int>& g2,
             const std::vector<int>* c1, const std::vector<int>* c2, SetSearch& s) {
  if (g1.size() != g2.size()) return false;
  auto order = [&](const std::vector<int>& g, const std::vector<int>* c, std::vector<int>& roots,
                   std::vector<int>& colors) {
    std::vector<std::size_t> idx(g.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](std::size_t x, std::size_t y) {
      int cx = c ? (*c)[x] : 0, cy = c ? (*c)[y] : 0;
      if (cx != cy) return cx < cy;
      if (rs.norm2(g[x]) != rs.norm2(g[y])) return rs.norm2(g[x]) < rs.norm2(g[y]);
      return rs.roots[g[x]] < rs.roots[g[y]];
    });
    for (auto i : idx) {
      roots.push_back(g[i]);
      colors.push_back(c ? (*c)[i] : 0);
    }
  };
  order(g1, c1, s.a, s.ca);
  order(g2, c2, s.b, s.cb);
  if (s.ca != s.cb) return false;
  // Gram matrices must agree up to a color-preserving permutation; compare
  // the sorted multisets of rows as a quick necessary test.
  auto row_sig = [&](const std::vector<int>& g, const std::vector<int>& col) {
    std::vector<std::vector<int>> rows;
    for (std::size_t i = 0; i < g.size(); ++i) {
      std::vector<int> r;
      for (std::size_t j = 0; j < g.size(); ++j) r.push_back(rs.inner(g[i], g[j]) * 1024 + col[j]);
      std::sort(r.begin(), r.end());
      r.push_back(col[i]);
      rows.push_back(r);
    }
    std::sort(rows.begin(), rows.end());
    return rows;
  };
  if (row_sig(s.a, s.ca) != row_sig(s.b, s.cb)) return false;
  s.match.assign(s.a.size(), -1);
  s.used.assign(s.b.size(), 0);
  return true;
}

}  // namespace

std::optional<WeylElement> conjugate_sets(const RootSystem& rs, const WeylSubgroup& sub, const std::vector<int>& g1,
                                          const std::vector<int>& g2, const std::vector<int>* colors1,
                                          const std::vector<int>* colors2) {
  SetSearch s{rs, {}, {}, {}, {}, {}, {}, {}, {}};
  if (!prepare(rs, g1, g2, colors1, colors2, s)) return std::nullopt;
  std::vector<Weight> ma, mb;
  for (int r : s.a) ma.push_back(root_weight(rs, r));
  for (int r : s.b) mb.push_back(root_weight(rs, r));
  if (!s.run(0, sub.basis, ma, mb)) return std::nullopt;
  std::vector<int> path = s.u_path;
  path.insert(path.end(), s.v_path.rbegin(), s.v_path.rend());
  return WeylElement::from_reflections(rs, path);
}

bool sets_conjugate(const RootSystem& rs, const std::vector<int>& basis, const std::vector<int>& g1,
                    const std::vector<int>& g2, const std::vector<int>* colors1,
                    const std::vector<int>* colors2) {
  SetSearch s{rs, {}, {}, {}, {}, {}, {}, {}, {}};
  if (!prepare(rs, g1, g2, colors1, colors2, s)) return false;
  std::vector<Weight> ma, mb;
  for (int r : s.a) ma.push_back(root_weight(rs, r));
  for (int r : s.b) mb.push_back(root_weight(rs, r));
  return s.run(0, basis, ma, mb);
}

}  // namespace thetanil
