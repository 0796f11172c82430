#include "thetanil/method1.hpp"

#include "thetanil/parallel.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <random>
#include <set>

namespace thetanil {

LieElement h_from_wdd(const ChevalleyAlgebra& alg, const WeightedDynkinDiagram& d) {
  if (static_cast<int>(d.size()) != alg.rank()) throw std::invalid_argument("h_from_wdd: need one label per node");
  RatVec v(d.begin(), d.end());
  return alg.cartan_from_values(v);
}

Weight weight_of(const ChevalleyAlgebra& alg, const LieElement& h) {
  RatVec v = alg.cartan_values(h);
  Weight w(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].get_den() != 1 || !v[i].get_num().fits_slong_p())
      throw std::invalid_argument("weight_of: alpha_i(h) is not a small integer");
    w[i] = v[i].get_num().get_si();
  }
  return w;
}

namespace {

std::uint64_t weight_hash(const Weight& w) {
  std::uint64_t h = 0x51ed270b27a3c1f5ULL;
  for (auto x : w) h = splitmix64(h ^ static_cast<std::uint64_t>(x));
  return h;
}

struct NormalityData {
  std::vector<int> s;     // roots of degree 1 with alpha(h) = 2
  std::vector<int> zero;  // roots of degree 0 with alpha(h) = 0
};

NormalityData collect(const ThetaGrading& gr, const Weight& v) {
  const RootSystem& rs = gr.rs();
  const int one = gr.residue(1);
  NormalityData d;
  for (int r = 0; r < rs.size(); ++r) {
    const int deg = gr.deg[r];
    if (deg != one && deg != 0) continue;
    const std::int64_t val = root_value(rs, v, r);
    if (deg == one && val == 2) d.s.push_back(r);
    if (deg == 0 && val == 0) d.zero.push_back(r);
  }
  return d;
}

// h lies in the span of the h_alpha, alpha in S. Tested on values.
bool in_coroot_span(const RootSystem& rs, const std::vector<int>& s, const Weight& v) {
  const int l = rs.rank;
  IntMatrix a(l, s.size()), b(l, s.size() + 1);
  for (int j = 0; j < l; ++j) {
    for (std::size_t k = 0; k < s.size(); ++k) a(j, k) = b(j, k) = rs.pair(j, s[k]);
    b(j, s.size()) = v[j];
  }
  return exact_rank(a) == exact_rank(b);
}

// [g_0(0), e] = g_1(2) for e = sum u_k x_{s_k}.
bool general_position(const ChevalleyAlgebra& alg, const NormalityData& d, const std::vector<std::int64_t>& u) {
  const RootSystem& rs = alg.roots();
  const int l = rs.rank;
  std::vector<int> row(rs.size(), -1);
  for (std::size_t k = 0; k < d.s.size(); ++k) row[d.s[k]] = static_cast<int>(k);
  IntMatrix a(d.s.size(), d.zero.size() + l);
  for (std::size_t c = 0; c < d.zero.size(); ++c) {
    for (std::size_t k = 0; k < d.s.size(); ++k) {
      if (!u[k]) continue;
      int t = rs.sum(d.zero[c], d.s[k]);
      if (t < 0) continue;
      a(row[t], c) += u[k] * alg.N(d.zero[c], d.s[k]);
    }
  }
  for (int j = 0; j < l; ++j)
    for (std::size_t k = 0; k < d.s.size(); ++k) a(k, d.zero.size() + j) = u[k] * rs.pair(d.s[k], j);
  return exact_rank(a) == d.s.size();
}

std::optional<Sl2Triple> solve_f(const ChevalleyAlgebra& alg, const NormalityData& d, const Weight& v,
                                 const std::vector<std::int64_t>& u) {
  const RootSystem& rs = alg.roots();
  const int l = rs.rank;
  const std::size_t n = d.s.size();
  // Unknowns: coefficient of x_{-s_k} in f. Rows: alpha_j([e,f]) then root parts.
  std::map<int, std::size_t> root_rows;
  std::vector<std::tuple<std::size_t, std::size_t, std::int64_t>> entries;
  for (std::size_t k = 0; k < n; ++k) {
    const int nk = rs.neg(d.s[k]);
    for (std::size_t b = 0; b < n; ++b) {
      if (!u[b]) continue;
      if (b == k) {
        for (int j = 0; j < l; ++j) entries.emplace_back(j, k, u[b] * rs.pair(j, d.s[k]));
        continue;
      }
      int t = rs.sum(d.s[b], nk);
      if (t < 0) continue;
      auto it = root_rows.emplace(t, l + root_rows.size()).first;
      entries.emplace_back(it->second, k, u[b] * alg.N(d.s[b], nk));
    }
  }
  RatMatrix a(l + root_rows.size(), n);
  for (auto& [r, c, x] : entries) a(r, c) += x;
  RatVec rhs(a.rows());
  for (int j = 0; j < l; ++j) rhs[j] = v[j];
  auto sol = solve(a, rhs);
  if (!sol) return std::nullopt;
  Sl2Triple t;
  t.h = alg.cartan_from_values(RatVec(v.begin(), v.end()));
  t.e = alg.zero();
  t.f = alg.zero();
  for (std::size_t k = 0; k < n; ++k) {
    t.e[alg.root_index(d.s[k])] = u[k];
    t.f[alg.root_index(rs.neg(d.s[k]))] = (*sol)[k];
  }
  if (!is_sl2_triple(alg, t)) throw std::logic_error("decide_normal: solution fails the sl2 relations");
  return t;
}

}  // namespace

std::optional<Sl2Triple> decide_normal(const ThetaGrading& gr, const Weight& v, const RunOptions& opt) {
  const ChevalleyAlgebra& alg = *gr.alg;
  const RootSystem& rs = gr.rs();
  if (static_cast<int>(v.size()) != rs.rank) throw std::invalid_argument("decide_normal: wrong number of values");
  if (std::all_of(v.begin(), v.end(), [](auto x) { return x == 0; })) return std::nullopt;
  NormalityData d = collect(gr, v);
  if (d.s.empty() || !in_coroot_span(rs, d.s, v)) return std::nullopt;

  std::mt19937_64 rng(task_seed(opt.seed, weight_hash(v)));
  std::vector<std::int64_t> u(d.s.size());
  for (std::int64_t n = 4;; n *= 2) {
    if (n > opt.omega_cap)
      throw RetryBudgetExceeded("decide_normal: no element in general position found with coefficients up to " +
                                std::to_string(opt.omega_cap));
    for (auto& x : u) x = static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(n + 1));
    if (general_position(alg, d, u)) break;
  }
  return solve_f(alg, d, v, u);
}

std::optional<Sl2Triple> decide_normal(const ThetaGrading& gr, const LieElement& h, const RunOptions& opt) {
  RatVec vals = gr.alg->cartan_values(h);
  Weight v(vals.size());
  for (std::size_t i = 0; i < vals.size(); ++i) {
    // A normal h has integral values.
    if (vals[i].get_den() != 1 || !vals[i].get_num().fits_slong_p()) return std::nullopt;
    v[i] = vals[i].get_num().get_si();
  }
  return decide_normal(gr, v, opt);
}

std::vector<Characteristic> classify_nilpotent_g(const ChevalleyAlgebra& alg) {
  static std::mutex mu;
  static std::map<std::string, std::vector<Characteristic>> cache;
  const RootSystem& rs = alg.roots();
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(rs.label());
    if (it != cache.end()) return it->second;
  }
  AlgebraPtr borrowed(std::shared_ptr<void>(), &alg);
  ThetaGrading trivial = grading_from_degrees(borrowed, IntVec(rs.rank, 0), 1);
  std::vector<Characteristic> out;
  out.push_back({IntVec(rs.rank, 0), alg.zero()});
  IntVec d(rs.rank, 0);
  std::vector<IntVec> all;
  auto rec = [&](auto&& self, int i) -> void {
    if (i == rs.rank) {
      if (std::any_of(d.begin(), d.end(), [](int x) { return x != 0; })) all.push_back(d);
      return;
    }
    for (int x = 0; x <= 2; ++x) {
      d[i] = x;
      self(self, i + 1);
    }
  };
  rec(rec, 0);
  for (const auto& diag : all) {
    Weight v(diag.begin(), diag.end());
    if (decide_normal(trivial, v)) out.push_back({diag, h_from_wdd(alg, diag)});
  }
  std::lock_guard<std::mutex> lock(mu);
  cache.emplace(rs.label(), out);
  return out;
}

namespace {

std::vector<Weight> distinct_images(const RootSystem& rs, const std::vector<std::vector<int>>& words, const Weight& h) {
  std::set<Weight> seen;
  std::vector<Weight> out;
  for (const auto& w : words) {
    Weight img = apply_word(rs, w, h);
    if (seen.insert(img).second) out.push_back(img);
  }
  return out;
}

}  // namespace

std::vector<Sl2Triple> normal_list(const ThetaGrading& gr, const std::vector<std::vector<int>>& coset_words,
                                   const LieElement& h, const RunOptions& opt) {
  auto images = distinct_images(gr.rs(), coset_words, weight_of(*gr.alg, h));
  std::vector<std::optional<Sl2Triple>> found(images.size());
  parallel_for(images.size(), opt.threads, [&](std::size_t i) { found[i] = decide_normal(gr, images[i], opt); });
  std::vector<Sl2Triple> out;
  for (auto& t : found)
    if (t) out.push_back(std::move(*t));
  return out;
}

OrbitRecord zero_record(const ThetaGrading& gr) {
  OrbitRecord z;
  z.triple = {gr.alg->zero(), gr.alg->zero(), gr.alg->zero()};
  z.h_values = Weight(gr.rs().rank, 0);
  z.dim = 0;
  z.wdd = IntVec(gr.rs().rank, 0);
  return z;
}

void sort_records(std::vector<OrbitRecord>& records) {
  std::stable_sort(records.begin(), records.end(), [](const OrbitRecord& a, const OrbitRecord& b) {
    bool za = std::all_of(a.h_values.begin(), a.h_values.end(), [](auto x) { return x == 0; });
    bool zb = std::all_of(b.h_values.begin(), b.h_values.end(), [](auto x) { return x == 0; });
    if (za != zb) return za;
    return a.h_values < b.h_values;
  });
}

std::vector<OrbitRecord> method1(const ThetaGrading& gr, const RunOptions& opt, Method1Stats* stats) {
  const RootSystem& rs = gr.rs();
  auto chars = classify_nilpotent_g(*gr.alg);
  CosetReps reps = coset_words(rs, WeylSubgroup{gr.delta0});

  struct Task {
    std::size_t ch;
    Weight h;
  };
  std::vector<Task> tasks;
  for (std::size_t c = 0; c < chars.size(); ++c) {
    if (std::all_of(chars[c].wdd.begin(), chars[c].wdd.end(), [](int x) { return x == 0; })) continue;
    Weight h(chars[c].wdd.begin(), chars[c].wdd.end());
    for (auto& img : distinct_images(rs, reps.words, h)) tasks.push_back({c, std::move(img)});
  }
  if (stats) {
    stats->coset_count = reps.words.size();
    stats->characteristics = chars.size();
    stats->h_count = tasks.size();
  }

  std::vector<std::optional<Sl2Triple>> found(tasks.size());
  parallel_for(tasks.size(), opt.threads, [&](std::size_t i) { found[i] = decide_normal(gr, tasks[i].h, opt); });

  std::vector<OrbitRecord> out{zero_record(gr)};
  std::set<Weight> seen;
  for (std::size_t i = 0; i < tasks.size(); ++i) {
    if (!found[i]) continue;
    if (!seen.insert(tasks[i].h).second) throw std::logic_error("method1: canonical h repeated");
    OrbitRecord r;
    r.triple = std::move(*found[i]);
    r.h_values = tasks[i].h;
    r.wdd = chars[tasks[i].ch].wdd;
    out.push_back(std::move(r));
  }
  sort_records(out);
  return out;
}

}  // namespace thetanil
