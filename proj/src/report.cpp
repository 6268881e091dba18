#include "edgepow/report.hpp"

#include <sstream>

#include "edgepow/error.hpp"

namespace edgepow {

Json to_json(VertexSet s) { return Json(s.members()); }

Json to_json(const WeightVector& w) { return Json(w.values()); }

Json to_json(const EarDecomposition& e) {
  Json ears = Json::array();
  for (const auto& comp : e.components)
    for (const auto& ear : comp) ears.push_back(ear.walk);
  return Json{{"ears", ears}, {"weights", to_json(e.weights)}};
}

EarDecomposition ear_decomposition_from_json(const Json& j) {
  try {
    EarDecomposition out;
    out.weights = WeightVector(j.at("weights").get<std::vector<int>>());
    Mask seen = 0;
    for (const auto& walk : j.at("ears")) {
      Ear ear{walk.get<std::vector<int>>()};
      Mask verts = 0;
      for (int v : ear.walk) {
        if (v < 1 || v > kMaxVertices) throw InputError("ear vertex " + std::to_string(v) + " out of range");
        verts |= bit_of(v);
      }
      if (out.components.empty() || (ear.is_closed() && (verts & seen) == 0)) out.components.emplace_back();
      out.components.back().push_back(std::move(ear));
      seen |= verts;
    }
    return out;
  } catch (const nlohmann::json::exception& ex) {
    throw InputError(std::string("malformed ear decomposition: ") + ex.what());
  }
}

Json to_json(const MuStarResult& r) {
  Json j{{"mu_star", r.mu_star}, {"phi_star", r.phi_star}};
  j["decomposition"] = r.witness_decomposition ? to_json(*r.witness_decomposition) : Json(nullptr);
  j["witness_weights"] = r.witness_weights ? to_json(*r.witness_weights) : Json(nullptr);
  return j;
}

Json to_json(const AssResult& r) {
  Json minimal = Json::array();
  for (const auto& c : r.minimal_primes) minimal.push_back(to_json(c.cover));
  Json embedded = Json::array();
  for (const auto& c : r.embedded_primes)
    embedded.push_back(Json{{"cover", to_json(c.cover)},
                            {"witness", to_json(c.witness.value_or(VertexSet{}))},
                            {"mu_star", c.witness_mu_star.value_or(0)}});
  return Json{{"t", r.t}, {"minimal", minimal}, {"embedded", embedded}, {"graph_hash", r.graph_hash}};
}

Json to_json(const StabilityReport& r) {
  Json minimal = Json::array();
  Json members = Json::array();
  for (const auto& c : r.ass_infty_members) {
    if (c.is_minimal_cover) {
      minimal.push_back(to_json(c.cover));
      continue;
    }
    members.push_back(Json{{"cover", to_json(c.cover)},
                           {"core", to_json(c.core)},
                           {"s", c.stability_index.value_or(0)},
                           {"index", r.per_prime_index.at(c.cover)},
                           {"witness", to_json(c.witness.value_or(VertexSet{}))}});
  }
  return Json{{"astab", r.astab},
              {"cms_bound", r.cms_bound ? Json(*r.cms_bound) : Json(nullptr)},
              {"minimal", minimal},
              {"embedded", members}};
}

Json to_json(const SocleWitness& w) { return Json{{"t", w.t}, {"a", to_json(w.weights)}}; }

Json to_json(const std::vector<SBase>& bases) {
  Json out = Json::array();
  for (const auto& b : bases) {
    Json edges = Json::array();
    for (auto e : b.graph.edges()) edges.push_back({e.u, e.v});
    out.push_back(Json{{"s", b.s}, {"n", b.graph.n()}, {"edges", edges}, {"minimal", b.minimal}});
  }
  return out;
}

std::string prime_notation(VertexSet f) {
  std::string out = "(";
  bool first = true;
  for (int v : f.members()) {
    if (!first) out += ",";
    out += "x" + std::to_string(v);
    first = false;
  }
  return out + ")";
}

std::string to_table(const AssResult& r) {
  std::ostringstream os;
  os << "t = " << r.t << "\n";
  os << "minimal primes (" << r.minimal_primes.size() << "):\n";
  for (const auto& c : r.minimal_primes) os << "  " << prime_notation(c.cover) << "\n";
  os << "embedded primes (" << r.embedded_primes.size() << "):\n";
  for (const auto& c : r.embedded_primes)
    os << "  " << prime_notation(c.cover) << "  core " << to_string(c.core) << "  witness "
       << to_string(*c.witness) << "  mu* " << *c.witness_mu_star << "\n";
  return os.str();
}

std::string to_table(const StabilityReport& r) {
  std::ostringstream os;
  os << "astab = " << r.astab;
  if (r.cms_bound) os << "  (bound m - t = " << *r.cms_bound << ")";
  os << "\n";
  for (const auto& c : r.ass_infty_members) {
    os << "  " << prime_notation(c.cover);
    if (c.is_minimal_cover)
      os << "  minimal\n";
    else
      os << "  from t = " << r.per_prime_index.at(c.cover) << "  core " << to_string(c.core) << "  s "
         << *c.stability_index << "\n";
  }
  return os.str();
}

std::string to_table(const MuStarResult& r) {
  std::ostringstream os;
  os << "mu* = " << r.mu_star << "  phi* = " << r.phi_star << "\n";
  if (r.witness_decomposition) {
    os << "ears:\n";
    for (const auto& comp : r.witness_decomposition->components)
      for (const auto& ear : comp) {
        os << " ";
        for (int v : ear.walk) os << " " << v;
        os << (ear.is_odd() ? "  (odd)\n" : "  (even)\n");
      }
  }
  if (r.witness_weights) {
    os << "weights:";
    for (int x : r.witness_weights->values()) os << " " << x;
    os << "\n";
  }
  return os.str();
}

std::string to_table(const std::vector<SBase>& bases) {
  std::ostringstream os;
  for (const auto& b : bases) {
    os << "s=" << b.s << " n=" << b.graph.n() << " edges:";
    for (auto e : b.graph.edges()) os << " " << e.u << "-" << e.v;
    os << "\n";
  }
  return os.str();
}

}  // namespace edgepow
