#include "thetanil/pisys.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace thetanil {

namespace {

struct SetHash {
  std::size_t operator()(const std::vector<int>& v) const noexcept {
    std::size_t h = 1469598103934665603ULL;
    for (int x : v) h = (h ^ static_cast<std::size_t>(x)) * 1099511628211ULL;
    return h;
  }
};

void check_roots(const RootSystem& rs, const std::vector<int>& gamma) {
  for (int r : gamma)
    if (r < 0 || r >= rs.size()) throw std::invalid_argument("not a root index: " + std::to_string(r));
}

}  // namespace

bool is_pi_system(const RootSystem& rs, const std::vector<int>& gamma) {
  check_roots(rs, gamma);
  for (std::size_t i = 0; i < gamma.size(); ++i)
    for (std::size_t j = 0; j < gamma.size(); ++j) {
      if (i == j) continue;
      if (gamma[i] == gamma[j]) return false;
      if (rs.sum(gamma[i], rs.neg(gamma[j])) >= 0) return false;
    }
  return root_rank(rs, gamma) == gamma.size();
}

std::vector<PiSystem> elementary_transformations(const RootSystem& rs, const PiSystem& gamma) {
  std::set<PiSystem> out;
  for (const auto& d : components(rs, gamma)) {
    const int low = lowest_root_of_subsystem(rs, d);
    for (int r : d) {
      PiSystem g;
      for (int x : gamma)
        if (x != r) g.push_back(x);
      g.push_back(low);
      std::sort(g.begin(), g.end());
      if (is_pi_system(rs, g)) out.insert(g);
    }
  }
  return {out.begin(), out.end()};
}

std::string pi_signature(const RootSystem& rs, const PiSystem& gamma, const std::vector<int>* colors) {
  std::vector<std::string> parts;
  for (const auto& c : components(rs, gamma)) {
    std::string p = dynkin_type(rs, c);
    if (colors) {
      std::vector<int> cs;
      for (int r : c) cs.push_back((*colors)[r]);
      std::sort(cs.begin(), cs.end());
      p += "[";
      for (int x : cs) p += std::to_string(x) + ",";
      p += "]";
    }
    parts.push_back(p);
  }
  std::sort(parts.begin(), parts.end());
  std::string s;
  for (const auto& p : parts) s += p + "|";
  // Roots orthogonal to every member, counted per color.
  std::map<int, int> orth;
  for (int a = 0; a < rs.size(); ++a) {
    bool ok = true;
    for (int g : gamma)
      if (rs.inner(a, g) != 0) {
        ok = false;
        break;
      }
    if (ok) ++orth[colors ? (*colors)[a] : 0];
  }
  for (const auto& [c, n] : orth) s += "o" + std::to_string(c) + ":" + std::to_string(n);
  return s;
}

std::vector<PiSystem> dedup_conjugate(const RootSystem& rs, const std::vector<int>& basis,
                                      const std::vector<PiSystem>& systems, const std::vector<int>* colors) {
  std::unordered_map<std::string, std::vector<std::size_t>> buckets;
  std::vector<PiSystem> out;
  std::unordered_set<PiSystem, SetHash> exact;
  for (const auto& g : systems) {
    if (!exact.insert(g).second) continue;
    auto& bucket = buckets[pi_signature(rs, g, colors)];
    bool dup = false;
    std::vector<int> cg;
    if (colors)
      for (int r : g) cg.push_back((*colors)[r]);
    for (std::size_t k : bucket) {
      std::vector<int> ck;
      if (colors)
        for (int r : out[k]) ck.push_back((*colors)[r]);
      if (sets_conjugate(rs, basis, g, out[k], colors ? &cg : nullptr, colors ? &ck : nullptr)) {
        dup = true;
        break;
      }
    }
    if (dup) continue;
    bucket.push_back(out.size());
    out.push_back(g);
  }
  return out;
}

namespace {

// Smaller systems first, then lexicographic in root order, so the first
// member of each class tends to use positive, low roots.
bool system_less(const PiSystem& a, const PiSystem& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

}  // namespace

std::vector<PiSystem> classify_maximal(const RootSystem& rs, const WeylSubgroup& sub, PiStats* stats) {
  PiSystem start = sub.basis;
  std::sort(start.begin(), start.end());
  if (start.empty()) {
    if (stats) stats->closure_size = 1, stats->maximal_classes = 1;
    return {start};
  }
  std::unordered_set<PiSystem, SetHash> seen{start};
  std::vector<PiSystem> all{start};
  for (std::size_t k = 0; k < all.size(); ++k) {
    for (auto& g : elementary_transformations(rs, all[k]))
      if (seen.insert(g).second) all.push_back(std::move(g));
  }
  std::sort(all.begin(), all.end(), system_less);
  auto classes = dedup_conjugate(rs, sub.basis, all);
  if (stats) {
    stats->closure_size = all.size();
    stats->maximal_classes = classes.size();
  }
  return classes;
}

std::vector<PiSystem> classify_maximal(const RootSystem& rs) { return classify_maximal(rs, WeylSubgroup::full(rs)); }

std::vector<PiSystem> classify_all(const RootSystem& rs, const WeylSubgroup& sub, PiStats* stats) {
  auto maximal = classify_maximal(rs, sub, stats);
  std::set<PiSystem> subsets;
  for (const auto& m : maximal) {
    const std::size_t n = m.size();
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
      PiSystem g;
      for (std::size_t i = 0; i < n; ++i)
        if (mask >> i & 1) g.push_back(m[i]);
      subsets.insert(g);
    }
  }
  std::vector<PiSystem> cand(subsets.begin(), subsets.end());
  std::sort(cand.begin(), cand.end(), system_less);
  if (stats) stats->subsets_examined = cand.size();
  return dedup_conjugate(rs, sub.basis, cand);
}

std::vector<PiSystem> classify_all(const RootSystem& rs) { return classify_all(rs, WeylSubgroup::full(rs)); }

}  // namespace thetanil
