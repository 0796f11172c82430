#include "thetanil/method2.hpp"

#include "thetanil/parallel.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace thetanil {

std::vector<int> GradedCandidate::all() const {
  std::vector<int> a = pi0;
  a.insert(a.end(), pi1.begin(), pi1.end());
  std::sort(a.begin(), a.end());
  return a;
}

namespace {

constexpr std::uint64_t kP = (std::uint64_t{1} << 61) - 1;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b) {
  unsigned __int128 r = static_cast<unsigned __int128>(a) * b;
  std::uint64_t lo = static_cast<std::uint64_t>(r & kP), hi = static_cast<std::uint64_t>(r >> 61);
  std::uint64_t s = lo + hi;
  return s >= kP ? s - kP : s;
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e) {
  std::uint64_t r = 1;
  for (; e; e >>= 1, a = mulmod(a, a))
    if (e & 1) r = mulmod(r, a);
  return r;
}

std::uint64_t to_mod(long long x) { return x >= 0 ? static_cast<std::uint64_t>(x) % kP : kP - (static_cast<std::uint64_t>(-x) % kP); }

// Row echelon basis mod 2^61-1. Root coordinates are small, so every minor
// stays far below the modulus and independence mod p equals independence
// over Q.
struct ModBasis {
  std::vector<std::vector<std::uint64_t>> rows;
  std::vector<int> pivots;

  std::vector<std::uint64_t> reduce(const IntVec& v) const {
    std::vector<std::uint64_t> x(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) x[i] = to_mod(v[i]);
    for (std::size_t k = 0; k < rows.size(); ++k) {
      std::uint64_t c = x[pivots[k]];
      if (!c) continue;
      for (std::size_t i = 0; i < x.size(); ++i) x[i] = (x[i] + kP - mulmod(c, rows[k][i])) % kP;
    }
    return x;
  }
  bool independent(const IntVec& v) const {
    auto x = reduce(v);
    return std::any_of(x.begin(), x.end(), [](auto c) { return c != 0; });
  }
  bool add(const IntVec& v) {
    auto x = reduce(v);
    std::size_t p = 0;
    while (p < x.size() && !x[p]) ++p;
    if (p == x.size()) return false;
    std::uint64_t inv = powmod(x[p], kP - 2);
    for (auto& c : x) c = mulmod(c, inv);
    for (auto& r : rows) {
      std::uint64_t c = r[p];
      if (!c) continue;
      for (std::size_t i = 0; i < r.size(); ++i) r[i] = (r[i] + kP - mulmod(c, x[i])) % kP;
    }
    rows.push_back(std::move(x));
    pivots.push_back(static_cast<int>(p));
    return true;
  }
};

// All maximal pi1 within phi1 such that base u pi1 is a pi-system.
std::vector<std::vector<int>> maximal_extensions(const RootSystem& rs, const std::vector<int>& base,
                                                 const std::vector<int>& phi1) {
  auto compatible = [&](int a, int b) { return a != b && rs.sum(a, rs.neg(b)) < 0; };
  ModBasis start;
  for (int r : base) start.add(rs.roots[r]);
  std::vector<int> pool;
  for (int r : phi1)
    if (std::all_of(base.begin(), base.end(), [&](int b) { return compatible(r, b); }) &&
        start.independent(rs.roots[r]))
      pool.push_back(r);
  std::vector<std::vector<int>> out;
  std::vector<int> chosen;
  auto addable = [&](int r, const ModBasis& basis) {
    return std::all_of(chosen.begin(), chosen.end(), [&](int c) { return compatible(r, c); }) &&
           basis.independent(rs.roots[r]);
  };
  auto rec = [&](auto&& self, std::size_t i, const ModBasis& basis) -> void {
    if (i == pool.size()) {
      for (int r : pool)
        if (std::find(chosen.begin(), chosen.end(), r) == chosen.end() && addable(r, basis)) return;
      out.push_back(chosen);
      return;
    }
    const int r = pool[i];
    if (addable(r, basis)) {
      ModBasis next = basis;
      next.add(rs.roots[r]);
      chosen.push_back(r);
      self(self, i + 1, next);
      chosen.pop_back();
    }
    self(self, i + 1, basis);
  };
  rec(rec, 0, start);
  return out;
}

}  // namespace

std::vector<GradedCandidate> candidate_pi_systems(const ThetaGrading& gr, Method2Stats* stats) {
  const RootSystem& rs = gr.rs();
  std::vector<PiSystem> p0 =
      gr.delta0.empty() ? std::vector<PiSystem>{PiSystem{}} : classify_all(rs, WeylSubgroup{gr.delta0});

  std::vector<PiSystem> p1;
  for (const auto& base : p0) {
    for (auto& ext : maximal_extensions(rs, base, gr.phi1)) {
      PiSystem s = base;
      s.insert(s.end(), ext.begin(), ext.end());
      std::sort(s.begin(), s.end());
      p1.push_back(std::move(s));
    }
  }
  std::vector<int> colors(gr.deg.begin(), gr.deg.end());
  std::vector<PiSystem> classes = dedup_conjugate(rs, gr.delta0, p1, &colors);

  std::set<std::pair<std::vector<int>, std::vector<int>>> seen;
  std::vector<GradedCandidate> out;
  const int one = gr.residue(1);
  for (const auto& sys : classes) {
    std::vector<int> pi0, pi1;
    for (int r : sys) (gr.deg[r] == 0 ? pi0 : pi1).push_back(r);
    if (one == 0) {  // m = 1: every root has degree 0
      pi1 = pi0;
      pi0.clear();
    }
    const std::size_t n = pi1.size();
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
      GradedCandidate c;
      c.pi0 = pi0;
      for (std::size_t i = 0; i < n; ++i)
        if (mask >> i & 1) c.pi1.push_back(pi1[i]);
      if (seen.emplace(c.pi0, c.pi1).second) out.push_back(std::move(c));
    }
  }
  if (stats) {
    stats->p0_count = p0.size();
    stats->maximal_count = classes.size();
    stats->candidates = out.size();
  }
  return out;
}

CompletionResult completion_data(const ThetaGrading& gr, const GradedCandidate& cand) {
  const ChevalleyAlgebra& alg = *gr.alg;
  const RootSystem& rs = gr.rs();
  const int l = rs.rank;
  std::vector<int> pi = cand.pi0;
  pi.insert(pi.end(), cand.pi1.begin(), cand.pi1.end());
  const std::size_t n = pi.size();
  if (n == 0) throw std::invalid_argument("completion: empty candidate");
  if (!is_pi_system(rs, pi)) throw std::invalid_argument("completion: candidate is not a pi-system");

  // h0 = sum c_b h_{pi_b} with alpha(h0) = deg(alpha) on pi.
  RatMatrix a(n, n);
  RatVec rhs(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a(i, j) = rs.pair(pi[i], pi[j]);
    rhs[i] = i < cand.pi0.size() ? 0 : 1;
  }
  auto c = solve(a, rhs);
  if (!c) throw std::logic_error("completion: Cartan matrix of a pi-system is singular");

  CompletionResult res;
  res.h0_values.assign(l, 0);
  for (int j = 0; j < l; ++j)
    for (std::size_t b = 0; b < n; ++b) res.h0_values[j] += (*c)[b] * rs.pair(j, pi[b]);
  res.h0 = alg.cartan_from_values(res.h0_values);

  RatMatrix cond(n, l);
  for (std::size_t i = 0; i < n; ++i)
    for (int j = 0; j < l; ++j) cond(i, j) = rs.pair(pi[i], j);
  for (const auto& v : kernel(cond)) res.z_basis.push_back(alg.cartan_element(v));

  // A root vanishes on z exactly when it lies in the span of pi.
  ModBasis span;
  for (int r : pi) span.add(rs.roots[r]);
  const int one = gr.residue(1);
  for (int r = 0; r < rs.size(); ++r) {
    const int deg = gr.deg[r];
    if (deg != 0 && deg != one) continue;
    Rational v = 0;
    for (int j = 0; j < l; ++j)
      if (rs.roots[r][j]) v += res.h0_values[j] * rs.roots[r][j];
    const bool zero_on_h0 = sgn(v) == 0, one_on_h0 = v == 1;
    if (!zero_on_h0 && !one_on_h0) continue;
    if (span.independent(rs.roots[r])) continue;
    if (deg == 0 && zero_on_h0) res.psi0.push_back(r);
    if (deg == one && one_on_h0) res.psi1.push_back(r);
  }
  res.flat = n + res.psi0.size() == res.psi1.size();
  return res;
}

std::optional<CompletionResult> completion(const ThetaGrading& gr, const GradedCandidate& cand) {
  CompletionResult r = completion_data(gr, cand);
  if (!r.flat) return std::nullopt;
  return r;
}

std::vector<OrbitRecord> method2(const ThetaGrading& gr, const RunOptions& opt, Method2Stats* stats) {
  const RootSystem& rs = gr.rs();
  Method2Stats local;
  auto cands = candidate_pi_systems(gr, &local);

  std::vector<std::optional<Weight>> canon(cands.size());
  parallel_for(cands.size(), opt.threads, [&](std::size_t i) {
    if (cands[i].pi0.empty() && cands[i].pi1.empty()) return;
    auto res = completion(gr, cands[i]);
    if (!res) return;
    Weight h(rs.rank);
    for (int j = 0; j < rs.rank; ++j) {
      Rational v = 2 * res->h0_values[j];
      if (v.get_den() != 1) throw std::logic_error("method2: flat completion with non-integral 2h0");
      h[j] = v.get_num().get_si();
    }
    canon[i] = subdominant_path(rs, gr.delta0, h).first;
  });

  std::vector<Weight> unique;
  std::set<Weight> seen;
  for (const auto& h : canon) {
    if (!h) continue;
    ++local.flat;
    if (seen.insert(*h).second) unique.push_back(*h);
  }
  if (stats) *stats = local;

  std::vector<std::optional<Sl2Triple>> found(unique.size());
  parallel_for(unique.size(), opt.threads, [&](std::size_t i) { found[i] = decide_normal(gr, unique[i], opt); });

  std::vector<OrbitRecord> out{zero_record(gr)};
  for (std::size_t i = 0; i < unique.size(); ++i) {
    if (!found[i]) {
      std::string vals;
      for (auto x : unique[i]) vals += (vals.empty() ? "" : ",") + std::to_string(x);
      throw std::logic_error("method2: flat carrier with h = (" + vals + ") is not normal");
    }
    OrbitRecord r;
    r.triple = std::move(*found[i]);
    r.h_values = unique[i];
    out.push_back(std::move(r));
  }
  sort_records(out);
  return out;
}

}  // namespace thetanil
