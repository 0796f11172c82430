#include "thetanil/serialize.hpp"

#include <json.hpp>

namespace thetanil {

using nlohmann::json;

namespace {

json element_to_json(const ChevalleyAlgebra& alg, const LieElement& x) {
  json out = json::array();
  for (int k = 0; k < alg.dim(); ++k)
    if (sgn(x[k])) out.push_back(json::array({alg.basis_label(k), to_string(x[k])}));
  return out;
}

LieElement element_from_json(const ChevalleyAlgebra& alg, const json& j) {
  if (!j.is_array()) throw std::invalid_argument("Lie element must be a list of [label, coefficient] pairs");
  LieElement x = alg.zero();
  for (const auto& term : j) {
    if (!term.is_array() || term.size() != 2 || !term[0].is_string() || !term[1].is_string())
      throw std::invalid_argument("bad Lie element term " + term.dump());
    int k = alg.basis_from_label(term[0].get<std::string>());
    if (k < 0) throw std::invalid_argument("unknown basis label " + term[0].get<std::string>());
    x[k] = parse_rational(term[1].get<std::string>());
  }
  return x;
}

json summary_to_json(const NullconeSummary& s) {
  return json{{"orbits", s.orbit_count},   {"components", s.component_count}, {"dim", s.component_dim},
              {"rank", s.rank},            {"nregular", s.nregular},          {"very_nregular", s.very_nregular}};
}

NullconeSummary summary_from_json(const json& j) {
  NullconeSummary s;
  s.orbit_count = j.at("orbits").get<int>();
  s.component_count = j.at("components").get<int>();
  s.component_dim = j.at("dim").get<int>();
  s.rank = j.at("rank").get<int>();
  s.nregular = j.at("nregular").get<bool>();
  s.very_nregular = j.at("very_nregular").get<bool>();
  return s;
}

}  // namespace

OrbitFile make_orbit_file(const ThetaGrading& gr, const Classification& c, std::uint64_t seed) {
  OrbitFile f;
  f.alg = gr.alg;
  f.kac = gr.kac;
  f.m = gr.m;
  f.method = c.used == Method::One ? "1" : "2";
  f.seed = seed;
  f.dims = gr.dims();
  f.phi0 = phi0_type(gr);
  f.records = c.records;
  f.summary = summarize(gr, c.records);
  return f;
}

std::string lie_element_json(const ChevalleyAlgebra& alg, const LieElement& x) {
  return element_to_json(alg, x).dump();
}

std::string to_json(const OrbitFile& f) {
  const ChevalleyAlgebra& alg = *f.alg;
  const RootSystem& rs = alg.roots();
  json j;
  j["schema"] = kSchemaVersion;
  j["algebra"] = {{"type", std::string(1, rs.type)}, {"rank", rs.rank}};
  j["kac"] = f.kac ? json(f.kac->labels) : json(nullptr);
  j["m"] = f.m;
  j["method"] = f.method;
  j["seed"] = f.seed;
  j["grading"] = {{"dims", f.dims}, {"phi0", f.phi0}};
  json recs = json::array();
  for (const auto& r : f.records) {
    recs.push_back({{"h", element_to_json(alg, r.triple.h)},
                    {"e", element_to_json(alg, r.triple.e)},
                    {"f", element_to_json(alg, r.triple.f)},
                    {"dim", r.dim},
                    {"wdd", r.wdd}});
  }
  j["records"] = recs;
  j["summary"] = summary_to_json(f.summary);
  return j.dump(2) + "\n";
}

OrbitFile orbit_file_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("orbit file is not valid JSON: ") + e.what());
  }
  try {
    if (j.at("schema").get<int>() != kSchemaVersion)
      throw std::invalid_argument("unsupported schema version " + j.at("schema").dump());
    OrbitFile f;
    const auto& a = j.at("algebra");
    f.alg = make_algebra(a.at("type").get<std::string>() + std::to_string(a.at("rank").get<int>()));
    if (!j.at("kac").is_null()) f.kac = KacDiagram{j.at("kac").get<IntVec>()};
    f.m = j.at("m").get<int>();
    f.method = j.at("method").get<std::string>();
    f.seed = j.at("seed").get<std::uint64_t>();
    f.dims = j.at("grading").at("dims").get<std::vector<int>>();
    f.phi0 = j.at("grading").at("phi0").get<std::string>();
    for (const auto& r : j.at("records")) {
      OrbitRecord rec;
      rec.triple.h = element_from_json(*f.alg, r.at("h"));
      rec.triple.e = element_from_json(*f.alg, r.at("e"));
      rec.triple.f = element_from_json(*f.alg, r.at("f"));
      rec.h_values = weight_of(*f.alg, rec.triple.h);
      rec.dim = r.at("dim").get<int>();
      rec.wdd = r.at("wdd").get<IntVec>();
      f.records.push_back(std::move(rec));
    }
    f.summary = summary_from_json(j.at("summary"));
    return f;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed orbit file: ") + e.what());
  }
}

}  // namespace thetanil
