#include "thetanil/rootsys.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <map>
#include <numeric>
#include <stdexcept>

namespace thetanil {

namespace {

std::vector<IntVec> form_matrix(char type, int l) {
  std::vector<IntVec> f(l, IntVec(l, 0));
  auto link = [&](int i, int j, int v) { f[i][j] = f[j][i] = v; };
  switch (type) {
    case 'A':
      for (int i = 0; i < l; ++i) f[i][i] = 2;
      for (int i = 0; i + 1 < l; ++i) link(i, i + 1, -1);
      break;
    case 'B':
      for (int i = 0; i < l; ++i) f[i][i] = 4;
      f[l - 1][l - 1] = 2;
      for (int i = 0; i + 1 < l; ++i) link(i, i + 1, -2);
      break;
    case 'C':
      for (int i = 0; i < l; ++i) f[i][i] = 2;
      f[l - 1][l - 1] = 4;
      for (int i = 0; i + 2 < l; ++i) link(i, i + 1, -1);
      link(l - 2, l - 1, -2);
      break;
    case 'D':
      for (int i = 0; i < l; ++i) f[i][i] = 2;
      for (int i = 0; i + 2 < l; ++i) link(i, i + 1, -1);
      link(l - 3, l - 1, -1);
      break;
    case 'E':
      for (int i = 0; i < l; ++i) f[i][i] = 2;
      link(0, 2, -1);
      link(1, 3, -1);
      for (int i = 2; i + 1 < l; ++i) link(i, i + 1, -1);
      break;
    case 'F':
      f[0][0] = f[1][1] = 4;
      f[2][2] = f[3][3] = 2;
      link(0, 1, -2);
      link(1, 2, -2);
      link(2, 3, -1);
      break;
    case 'G':
      f[0][0] = 2;
      f[1][1] = 6;
      link(0, 1, -3);
      break;
    default:
      break;
  }
  return f;
}

int dot(const IntVec& a, const IntVec& b) {
  int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace

void check_type(char type, int rank) {
  const std::string name = std::string(1, type) + std::to_string(rank);
  switch (type) {
    case 'A':
      if (rank < 1) throw std::invalid_argument(name + ": type A needs rank >= 1");
      return;
    case 'B':
      if (rank < 2) throw std::invalid_argument(name + ": type B needs rank >= 2");
      return;
    case 'C':
      if (rank < 3) throw std::invalid_argument(name + ": type C needs rank >= 3 (C2 is B2)");
      return;
    case 'D':
      if (rank < 4) throw std::invalid_argument(name + ": type D needs rank >= 4");
      return;
    case 'E':
      if (rank < 6 || rank > 8) throw std::invalid_argument(name + ": type E exists only in ranks 6, 7, 8");
      return;
    case 'F':
      if (rank != 4) throw std::invalid_argument(name + ": type F exists only in rank 4");
      return;
    case 'G':
      if (rank != 2) throw std::invalid_argument(name + ": type G exists only in rank 2");
      return;
    default:
      throw std::invalid_argument(name + ": unknown type letter (expected one of A-G)");
  }
}

RootSystem build_root_system(const std::string& label) {
  if (label.size() < 2) throw std::invalid_argument("bad type label '" + label + "'");
  char t = static_cast<char>(std::toupper(static_cast<unsigned char>(label[0])));
  int r = 0;
  for (std::size_t i = 1; i < label.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(label[i])))
      throw std::invalid_argument("bad type label '" + label + "'");
    r = r * 10 + (label[i] - '0');
    if (r > 1000) throw std::invalid_argument("bad type label '" + label + "'");
  }
  return build_root_system(t, r);
}

RootSystem build_root_system(char type, int l) {
  check_type(type, l);
  RootSystem rs;
  rs.type = type;
  rs.rank = l;
  rs.form = form_matrix(type, l);
  rs.cartan.assign(l, IntVec(l, 0));
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j) rs.cartan[i][j] = 2 * rs.form[i][j] / rs.form[j][j];

  // Positive roots, generated height by height via root strings.
  std::vector<IntVec> pos;
  std::unordered_map<IntVec, int, CoordHash> seen;
  for (int i = 0; i < l; ++i) {
    IntVec e(l, 0);
    e[i] = 1;
    seen.emplace(e, static_cast<int>(pos.size()));
    pos.push_back(e);
  }
  for (std::size_t k = 0; k < pos.size(); ++k) {
    const IntVec beta = pos[k];
    for (int i = 0; i < l; ++i) {
      int pr = 0;  // <beta, alpha_i^vee>
      for (int j = 0; j < l; ++j) pr += beta[j] * rs.cartan[j][i];
      int p = 0;
      IntVec down = beta;
      while (true) {
        down[i] -= 1;
        if (!seen.count(down)) break;
        ++p;
      }
      if (p - pr > 0) {
        IntVec up = beta;
        up[i] += 1;
        if (!seen.count(up)) {
          seen.emplace(up, static_cast<int>(pos.size()));
          pos.push_back(up);
        }
      }
    }
  }
  auto height = [](const IntVec& v) { return std::accumulate(v.begin(), v.end(), 0); };
  std::sort(pos.begin(), pos.end(), [&](const IntVec& a, const IntVec& b) {
    int ha = height(a), hb = height(b);
    if (ha != hb) return ha < hb;
    return a > b;
  });
  rs.npos = static_cast<int>(pos.size());
  rs.roots = pos;
  for (const auto& p : pos) {
    IntVec n(p);
    for (auto& x : n) x = -x;
    rs.roots.push_back(n);
  }
  const int n = rs.size();
  for (int i = 0; i < n; ++i) rs.index_.emplace(rs.roots[i], i);

  std::vector<IntVec> fr(n);  // (alpha_j, root) for each j
  for (int a = 0; a < n; ++a) {
    fr[a].assign(l, 0);
    for (int j = 0; j < l; ++j)
      for (int k = 0; k < l; ++k) fr[a][j] += rs.form[j][k] * rs.roots[a][k];
  }
  rs.inner_.assign(n * n, 0);
  rs.pair_.assign(n * n, 0);
  rs.reflect_.assign(n * n, -1);
  rs.sum_.assign(n * n, -1);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) rs.inner_[a * n + b] = dot(rs.roots[a], fr[b]);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      const int ip = rs.inner_[a * n + b];
      const int nb = rs.inner_[b * n + b];
      if ((2 * ip) % nb != 0) throw std::logic_error("non-integral Cartan integer");
      rs.pair_[a * n + b] = 2 * ip / nb;
    }
  }
  IntVec tmp(l);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      const int c = rs.pair_[b * n + a];
      for (int k = 0; k < l; ++k) tmp[k] = rs.roots[b][k] - c * rs.roots[a][k];
      rs.reflect_[a * n + b] = rs.find(tmp);
      if (rs.reflect_[a * n + b] < 0) throw std::logic_error("root system not closed under reflection");
      for (int k = 0; k < l; ++k) tmp[k] = rs.roots[a][k] + rs.roots[b][k];
      rs.sum_[a * n + b] = rs.find(tmp);
    }
  }
  rs.reflection_words.resize(rs.npos);
  for (int r = 0; r < rs.npos; ++r) {
    if (rs.height(r) == 1) {
      int i = 0;
      while (rs.roots[r][i] == 0) ++i;
      rs.reflection_words[r] = {i};
      continue;
    }
    int i = 0;
    while (rs.pair(r, i) <= 0) ++i;
    const auto& inner_word = rs.reflection_words[rs.reflect(i, r)];
    auto& w = rs.reflection_words[r];
    w.push_back(i);
    w.insert(w.end(), inner_word.begin(), inner_word.end());
    w.push_back(i);
  }
  rs.highest_root = rs.roots[rs.npos - 1];
  rs.marks.assign(1, 1);
  rs.marks.insert(rs.marks.end(), rs.highest_root.begin(), rs.highest_root.end());
  return rs;
}

int RootSystem::height(int r) const {
  int h = 0;
  for (int x : roots[r]) h += x;
  return h;
}

int RootSystem::find(const IntVec& coords) const {
  auto it = index_.find(coords);
  return it == index_.end() ? -1 : it->second;
}

RatVec RootSystem::coroot(int a) const {
  RatVec c(rank);
  for (int i = 0; i < rank; ++i) c[i] = Rational(roots[a][i] * form[i][i], norm2(a));
  for (auto& q : c) q.canonicalize();
  return c;
}

Rational RootSystem::inner_coords(const RatVec& x, const RatVec& y) const {
  Rational s = 0;
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j)
      if (form[i][j] != 0) s += x[i] * y[j] * form[i][j];
  return s;
}

Rational pairing(const RootSystem& rs, const RatVec& lambda, const IntVec& mu) {
  if (static_cast<int>(mu.size()) != rs.rank || static_cast<int>(lambda.size()) != rs.rank)
    throw std::invalid_argument("pairing: vector length differs from the rank");
  if (std::all_of(mu.begin(), mu.end(), [](int x) { return x == 0; }))
    throw std::invalid_argument("pairing: mu = 0 is not a root");
  int idx = rs.find(mu);
  if (idx < 0) throw std::invalid_argument("pairing: mu is not a root");
  RatVec m(mu.begin(), mu.end());
  Rational r = 2 * rs.inner_coords(lambda, m) / rs.norm2(idx);
  r.canonicalize();
  return r;
}

std::vector<int> reflection_closure(const RootSystem& rs, const std::vector<int>& gens) {
  std::vector<char> in(rs.size(), 0);
  std::vector<int> out;
  for (int g : gens)
    if (!in[g]) {
      in[g] = 1;
      out.push_back(g);
    }
  for (std::size_t k = 0; k < out.size(); ++k)
    for (int g : gens) {
      int r = rs.reflect(g, out[k]);
      if (!in[r]) {
        in[r] = 1;
        out.push_back(r);
      }
    }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> simple_system(const RootSystem& rs, const std::vector<int>& subsystem) {
  std::vector<char> in(rs.size(), 0);
  for (int r : subsystem) in[r] = 1;
  std::vector<int> out;
  for (int a : subsystem) {
    if (!rs.positive(a)) continue;
    bool decomposable = false;
    for (int b : subsystem) {
      if (!rs.positive(b) || b == a) continue;
      int d = rs.sum(a, rs.neg(b));
      if (d >= 0 && rs.positive(d) && in[d]) {
        decomposable = true;
        break;
      }
    }
    if (!decomposable) out.push_back(a);
  }
  std::sort(out.begin(), out.end());
  return out;
}

SubsystemRoots subsystem_with_coords(const RootSystem& rs, const std::vector<int>& basis) {
  const int s = static_cast<int>(basis.size());
  SubsystemRoots out;
  std::vector<int> where(rs.size(), -1);
  for (int i = 0; i < s; ++i) {
    if (where[basis[i]] >= 0) throw std::invalid_argument("repeated root in basis");
    where[basis[i]] = static_cast<int>(out.roots.size());
    out.roots.push_back(basis[i]);
    IntVec e(s, 0);
    e[i] = 1;
    out.coords.push_back(e);
  }
  for (std::size_t k = 0; k < out.roots.size(); ++k) {
    for (int i = 0; i < s; ++i) {
      const int g = out.roots[k];
      const int r = rs.reflect(basis[i], g);
      IntVec c = out.coords[k];
      c[i] -= rs.pair(g, basis[i]);
      if (where[r] >= 0) {
        if (out.coords[where[r]] != c) throw std::invalid_argument("basis is not linearly independent");
        continue;
      }
      where[r] = static_cast<int>(out.roots.size());
      out.roots.push_back(r);
      out.coords.push_back(c);
    }
  }
  return out;
}

bool connected(const RootSystem& rs, const std::vector<int>& basis) {
  return components(rs, basis).size() <= 1;
}

std::vector<std::vector<int>> components(const RootSystem& rs, const std::vector<int>& basis) {
  const std::size_t n = basis.size();
  std::vector<int> comp(n, -1);
  std::vector<std::vector<int>> out;
  for (std::size_t i = 0; i < n; ++i) {
    if (comp[i] >= 0) continue;
    std::vector<int> members;
    std::deque<std::size_t> q{i};
    comp[i] = static_cast<int>(out.size());
    while (!q.empty()) {
      std::size_t u = q.front();
      q.pop_front();
      members.push_back(basis[u]);
      for (std::size_t v = 0; v < n; ++v)
        if (comp[v] < 0 && rs.inner(basis[u], basis[v]) != 0) {
          comp[v] = comp[i];
          q.push_back(v);
        }
    }
    std::sort(members.begin(), members.end());
    out.push_back(members);
  }
  return out;
}

std::size_t root_rank(const RootSystem& rs, const std::vector<int>& roots) {
  IntMatrix m(roots.size(), rs.rank);
  for (std::size_t i = 0; i < roots.size(); ++i)
    for (int j = 0; j < rs.rank; ++j) m(i, j) = rs.roots[roots[i]][j];
  return exact_rank(m);
}

int lowest_root_of_subsystem(const RootSystem& rs, const std::vector<int>& basis) {
  if (basis.empty()) throw std::invalid_argument("lowest root of an empty basis");
  if (root_rank(rs, basis) != basis.size()) throw std::invalid_argument("basis is not linearly independent");
  if (!connected(rs, basis)) throw std::invalid_argument("basis is not connected");
  auto sub = subsystem_with_coords(rs, basis);
  int best = -1, best_h = 0;
  for (std::size_t k = 0; k < sub.roots.size(); ++k) {
    int h = std::accumulate(sub.coords[k].begin(), sub.coords[k].end(), 0);
    if (best < 0 || h < best_h) {
      best = sub.roots[k];
      best_h = h;
    }
  }
  return best;
}

namespace {

struct Component {
  char letter;
  int n;
  bool short_roots;  // only meaningful for simply laced components
};

Component classify_component(const RootSystem& rs, const std::vector<int>& c) {
  const int n = static_cast<int>(c.size());
  int max_len = 0, min_len = 1 << 30, short_count = 0, long_count = 0, max_bond = 0;
  std::vector<int> degree(n, 0);
  for (int i = 0; i < n; ++i) {
    max_len = std::max(max_len, rs.norm2(c[i]));
    min_len = std::min(min_len, rs.norm2(c[i]));
  }
  for (int i = 0; i < n; ++i) {
    (rs.norm2(c[i]) == max_len ? long_count : short_count)++;
    for (int j = 0; j < n; ++j) {
      if (i == j || rs.inner(c[i], c[j]) == 0) continue;
      ++degree[i];
      max_bond = std::max(max_bond, rs.pair(c[i], c[j]) * rs.pair(c[j], c[i]));
    }
  }
  int ambient_short = 1 << 30;
  for (int r = 0; r < rs.npos; ++r) ambient_short = std::min(ambient_short, rs.norm2(r));
  if (max_bond == 3) return {'G', 2, false};
  if (max_bond == 2) {
    if (n == 2) return {'B', 2, false};
    if (n == 4 && short_count == 2) return {'F', 4, false};
    if (short_count == 1) return {'B', n, false};
    return {'C', n, false};
  }
  const bool is_short = max_len == ambient_short && rs.type != 'A' && rs.type != 'D' && rs.type != 'E';
  int branch = -1;
  for (int i = 0; i < n; ++i)
    if (degree[i] >= 3) branch = i;
  if (branch < 0) return {'A', n, is_short};
  // Arm lengths from the branch node.
  std::vector<int> arms;
  for (int j = 0; j < n; ++j) {
    if (j == branch || rs.inner(c[branch], c[j]) == 0) continue;
    int len = 0, prev = branch, cur = j;
    while (true) {
      ++len;
      int next = -1;
      for (int k = 0; k < n; ++k)
        if (k != prev && k != cur && rs.inner(c[cur], c[k]) != 0) next = k;
      if (next < 0) break;
      prev = cur;
      cur = next;
    }
    arms.push_back(len);
  }
  std::sort(arms.begin(), arms.end());
  if (arms[0] == 1 && arms[1] == 1) return {'D', n, is_short};
  return {'E', n, is_short};
}

}  // namespace

std::string dynkin_type(const RootSystem& rs, const std::vector<int>& basis) {
  if (basis.empty()) return "0";
  std::map<std::tuple<int, int, int>, int> counts;  // (-n, letter, short) -> multiplicity
  std::map<std::tuple<int, int, int>, std::string> names;
  for (const auto& c : components(rs, basis)) {
    Component k = classify_component(rs, c);
    auto key = std::make_tuple(-k.n, static_cast<int>(k.letter), k.short_roots ? 1 : 0);
    ++counts[key];
    names[key] = std::string(1, k.letter) + std::to_string(k.n) + (k.short_roots ? "~" : "");
  }
  std::string out;
  for (const auto& [key, mult] : counts) {
    if (!out.empty()) out += "+";
    if (mult > 1) out += std::to_string(mult);
    out += names[key];
  }
  return out;
}

Integer weyl_group_order(char type, int n) {
  auto fact = [](int k) {
    Integer f = 1;
    for (int i = 2; i <= k; ++i) f *= i;
    return f;
  };
  switch (type) {
    case 'A': return fact(n + 1);
    case 'B':
    case 'C': return (Integer(1) << n) * fact(n);
    case 'D': return (Integer(1) << (n - 1)) * fact(n);
    case 'E': return n == 6 ? Integer(51840) : n == 7 ? Integer(2903040) : Integer(696729600);
    case 'F': return 1152;
    case 'G': return 12;
    default: throw std::invalid_argument("unknown type");
  }
}

Integer weyl_group_order(const RootSystem& rs, const std::vector<int>& basis) {
  Integer order = 1;
  for (const auto& c : components(rs, basis)) {
    Component k = classify_component(rs, c);
    order *= weyl_group_order(k.letter, k.n);
  }
  return order;
}

}  // namespace thetanil
