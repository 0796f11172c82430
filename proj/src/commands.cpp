#include "thetanil/commands.hpp"

#include <algorithm>
#include <sstream>

namespace thetanil {

namespace {

std::string join(const std::vector<int>& v, const char* sep = ",") {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + std::to_string(v[i]);
  return s;
}

std::string join(const Weight& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

std::string element_text(const ChevalleyAlgebra& alg, const LieElement& x) {
  std::string s;
  for (int k = 0; k < alg.dim(); ++k) {
    if (!sgn(x[k])) continue;
    Rational c = x[k];
    if (!s.empty()) s += sgn(c) < 0 ? " - " : " + ";
    else if (sgn(c) < 0) s += "-";
    c = abs(c);
    if (c != 1) s += c.get_str() + "*";
    s += alg.basis_label(k);
  }
  return s.empty() ? "0" : s;
}

}  // namespace

std::pair<int, int> parse_range(const std::string& text) {
  auto pos = text.find("..");
  try {
    std::size_t used = 0;
    if (pos == std::string::npos) {
      int v = std::stoi(text, &used);
      if (used != text.size()) throw std::invalid_argument("");
      return {v, v};
    }
    std::string a = text.substr(0, pos), b = text.substr(pos + 2);
    int lo = std::stoi(a, &used);
    if (used != a.size()) throw std::invalid_argument("");
    int hi = std::stoi(b, &used);
    if (used != b.size() || hi < lo) throw std::invalid_argument("");
    return {lo, hi};
  } catch (const std::exception&) {
    throw std::invalid_argument("bad range '" + text + "', expected a..b");
  }
}

std::vector<int> parse_int_list(const std::string& text) { return parse_kac(text).labels; }

std::string cmd_roots(const std::string& type) {
  RootSystem rs = build_root_system(type);
  std::ostringstream os;
  os << "type " << rs.label() << "\n";
  os << "roots " << rs.size() << " (positive " << rs.npos << ")\n";
  os << "cartan matrix\n";
  for (const auto& row : rs.cartan) os << "  " << join(row, " ") << "\n";
  os << "marks " << join(rs.marks) << "\n";
  os << "highest root " << join(rs.highest_root) << "\n";
  os << "positive roots\n";
  for (int r = 0; r < rs.npos; ++r) os << "  " << join(rs.roots[r]) << "  height " << rs.height(r) << "\n";
  return os.str();
}

std::string cmd_cosets(const CosetConfig& cfg) {
  RootSystem rs = build_root_system(cfg.type);
  int given = cfg.extended_minus.has_value() + cfg.simple.has_value() + cfg.kac.has_value();
  if (given > 1) throw std::invalid_argument("give at most one subgroup description");
  WeylSubgroup sub;
  if (cfg.extended_minus) {
    std::vector<int> gens;
    for (int node = 0; node <= rs.rank; ++node) {
      if (std::find(cfg.extended_minus->begin(), cfg.extended_minus->end(), node) != cfg.extended_minus->end())
        continue;
      gens.push_back(node == 0 ? rs.neg(rs.npos - 1) : node - 1);
    }
    for (int node : *cfg.extended_minus)
      if (node < 0 || node > rs.rank) throw std::invalid_argument("extended diagram node out of range");
    sub = WeylSubgroup::generated_by(rs, gens);
  } else if (cfg.simple) {
    std::vector<int> gens;
    for (int i : *cfg.simple) {
      if (i < 1 || i > rs.rank) throw std::invalid_argument("simple root index out of range");
      gens.push_back(i - 1);
    }
    sub = WeylSubgroup::generated_by(rs, gens);
  } else if (cfg.kac) {
    AlgebraPtr alg = make_algebra(rs);
    sub = WeylSubgroup{grading_from_kac(alg, *cfg.kac).delta0};
  }
  CosetReps reps = coset_words(rs, sub);
  std::ostringstream os;
  os << reps.words.size() << "\n";
  os << "subgroup " << dynkin_type(rs, sub.basis) << ", order " << weyl_group_order(rs, sub.basis).get_str()
     << ", |W| " << weyl_group_order(rs, WeylSubgroup::full(rs).basis).get_str() << "\n";
  if (cfg.words)
    for (const auto& w : reps.words) {
      std::vector<int> one_based;
      for (int i : w) one_based.push_back(i + 1);
      os << (w.empty() ? "e" : join(one_based, " ")) << "\n";
    }
  return os.str();
}

std::string cmd_pisystems(const std::string& type) {
  RootSystem rs = build_root_system(type);
  PiStats stats;
  auto classes = classify_all(rs, WeylSubgroup::full(rs), &stats);
  std::size_t nonempty = 0;
  for (const auto& c : classes) nonempty += !c.empty();
  std::ostringstream os;
  os << nonempty << " classes\n";
  os << "closure " << stats.closure_size << ", maximal classes " << stats.maximal_classes << "\n";
  for (const auto& c : classes) {
    if (c.empty()) continue;
    os << "  " << dynkin_type(rs, c) << "  {";
    for (std::size_t i = 0; i < c.size(); ++i) os << (i ? " " : "") << "[" << join(rs.roots[c[i]]) << "]";
    os << "}\n";
  }
  return os.str();
}

ThetaGrading grading_for(const RunConfig& cfg) {
  if (cfg.kac.has_value() == cfg.nregular_order.has_value())
    throw std::invalid_argument("give exactly one of Kac labels or an N-regular order");
  AlgebraPtr alg = make_algebra(cfg.type);
  if (cfg.kac) return grading_from_kac(alg, *cfg.kac);
  if (*cfg.nregular_order < 2) throw std::invalid_argument("N-regular order must be at least 2");
  return grading_from_kac(alg, principal_kac_diagram(alg->roots(), *cfg.nregular_order));
}

std::string cmd_orbits(const RunConfig& cfg) {
  ThetaGrading gr = grading_for(cfg);
  Classification c = classify(gr, cfg.method, cfg.run);
  OrbitFile f = make_orbit_file(gr, c, cfg.run.seed);
  if (cfg.json) return to_json(f);
  const ChevalleyAlgebra& alg = *gr.alg;
  std::ostringstream os;
  os << "algebra " << gr.rs().label() << "  kac " << to_string(*gr.kac) << "  m " << gr.m << "\n";
  os << "g0 dim " << gr.dim(0) << " (" << f.phi0 << ")  g1 dim " << gr.dim(1) << "  method " << f.method << "\n";
  for (std::size_t i = 0; i < f.records.size(); ++i) {
    const auto& r = f.records[i];
    os << i << "  h (" << join(r.h_values) << ")  dim " << r.dim << "  wdd " << join(r.wdd) << "\n";
    os << "   e = " << element_text(alg, r.triple.e) << "\n";
  }
  const auto& s = f.summary;
  os << "orbits " << s.orbit_count << " (plus zero)  components " << s.component_count
     << (s.nregular && !s.very_nregular ? "*" : "") << "  dim " << s.component_dim << " rank " << s.rank
     << "  nregular " << (s.nregular ? "yes" : "no") << "\n";
  return os.str();
}

std::string cmd_nregular(const std::string& type, int lo, int hi, Method method, const RunOptions& run) {
  AlgebraPtr alg = make_algebra(type);
  std::ostringstream os;
  os << "order  kac  orbits  components  dim  rank\n";
  for (int m = lo; m <= hi; ++m) {
    SurveyRow row = nregular_survey(alg, m, method, run);
    const auto& s = row.summary;
    os << m << "  " << to_string(row.kac) << "  " << s.orbit_count << "  " << s.component_count
       << (s.very_nregular ? "" : "*") << "  " << s.component_dim << "  " << s.rank << "\n";
  }
  return os.str();
}

std::string cmd_wdd(const std::string& type) {
  AlgebraPtr alg = make_algebra(type);
  auto chars = classify_nilpotent_g(*alg);
  std::ostringstream os;
  os << chars.size() << " nilpotent orbits\n";
  for (const auto& c : chars) os << "  " << join(c.wdd) << "\n";
  return os.str();
}

}  // namespace thetanil
