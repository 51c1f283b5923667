#include "orbitwidth/serialize.hpp"

#include <json.hpp>

#include <sstream>

namespace orbitwidth {

namespace {

nlohmann::json vector_json(const RationalVector& v) {
  nlohmann::json arr = nlohmann::json::array();
  for (const Rational& r : v) arr.push_back(r.str());
  return arr;
}

}  // namespace

std::string gkm_to_json(const GkmGraph& g, int indent) {
  nlohmann::json j;
  j["n"] = g.n;
  j["vertices"] = nlohmann::json::array();
  for (const RationalVector& v : g.vertices) j["vertices"].push_back(vector_json(v));
  j["edges"] = nlohmann::json::array();
  for (const GkmEdge& e : g.edges) {
    j["edges"].push_back({{"u", e.u},
                          {"v", e.v},
                          {"swap", {e.swap.first, e.swap.second}},
                          {"area", e.area.str()}});
  }
  return j.dump(indent);
}

std::string gkm_to_dot(const GkmGraph& g) {
  std::ostringstream os;
  os << "graph gkm {\n";
  for (size_t u = 0; u < g.vertices.size(); ++u) {
    os << "  v" << u << " [label=\"(";
    for (size_t c = 0; c < g.vertices[u].size(); ++c) {
      if (c > 0) os << ',';
      os << g.vertices[u][c];
    }
    os << ")\"];\n";
  }
  for (const GkmEdge& e : g.edges)
    os << "  v" << e.u << " -- v" << e.v << " [label=\"area=" << e.area << "\"];\n";
  os << "}\n";
  return os.str();
}

std::string width_report_to_json(const WidthReport& r, int indent) {
  nlohmann::json j;
  j["n"] = r.n;
  j["flag_type"] = r.flag.cumulative;
  j["upper"] = r.upper ? nlohmann::json(r.upper->str()) : nlohmann::json(nullptr);
  j["upper_pair"] = r.upper_pair
                        ? nlohmann::json({r.upper_pair->first, r.upper_pair->second})
                        : nlohmann::json(nullptr);
  j["lower"] = r.lower ? nlohmann::json(r.lower->str()) : nlohmann::json(nullptr);
  j["lower_applicable"] = r.lower_applicable;
  j["exact"] = r.exact;
  j["degenerate"] = r.degenerate;
  j["regular"] = r.regular;
  return j.dump(indent);
}

std::string reps_to_json(const std::vector<CosetRep>& reps, int indent) {
  nlohmann::json arr = nlohmann::json::array();
  for (const CosetRep& rep : reps) arr.push_back(rep.perm.images);
  return arr.dump(indent);
}

}  // namespace orbitwidth
