#include "bullfree_cli/report.hpp"

#include <cstdio>

#include "bullfree/errors.hpp"

namespace bullfree::cli {

std::string fnv1a_hex(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

namespace {

std::string_view kind_name(PatternKind k) {
  switch (k) {
    case PatternKind::bull: return "bull";
    case PatternKind::hole: return "hole";
    case PatternKind::triangle: return "triangle";
  }
  return "unknown";
}

}  // namespace

json to_json(const PatternWitness& w) {
  json j{{"kind", kind_name(w.kind)}, {"vertices", w.vertices}};
  if (w.kind == PatternKind::hole) j["length"] = w.hole_length;
  return j;
}

json to_json(const HomogeneousSet& s) { return json{{"X", s.members}, {"size", s.members.size()}}; }

json to_json(const HomogeneousPair& p) {
  return json{{"A", p.a},         {"B", p.b},
              {"C", p.c},         {"D", p.d},
              {"E", p.e},         {"F", p.f},
              {"small", p.small()}, {"proper", p.proper()},
              {"sideSize", p.side_size()}};
}

json to_json(const DecompositionOutcome& d) {
  json j{{"tag", to_string(d.tag)}};
  if (d.tag == DecompositionOutcome::Tag::none) {
    j["message"] = "no small homogeneous pair, no proper homogeneous pair and no homogeneous set";
    return j;
  }
  j["side"] = d.side;
  j["sideSize"] = d.side_size();
  if (d.pair) j["pair"] = to_json(*d.pair);
  if (d.set) j["set"] = to_json(*d.set);
  return j;
}

json to_json(const IndependentSetResult& s) {
  return json{{"vertices", s.vertices}, {"totalWeight", s.total_weight}};
}

json to_json(const WisDecision& d) {
  json j{{"decision", d.yes ? "YES" : "NO"},
         {"certificate", to_json(d.certificate)},
         {"contractions", d.contractions}};
  j["alpha"] = d.alpha ? json(*d.alpha) : json(nullptr);
  return j;
}

json to_json(const KernelBounds& b) {
  json j{{"k", b.k}, {"g", b.g}, {"f", b.f}, {"fOld", b.f_old}};
  j["p"] = b.p ? json(*b.p) : json(nullptr);
  j["gp"] = b.gp ? json(*b.gp) : json(nullptr);
  return j;
}

json to_json(const T1Report& r) {
  json checks = json::array();
  for (const auto& c : r.checks) {
    json item{{"name", c.name}, {"status", to_string(c.status)}};
    if (!c.detail.empty()) item["detail"] = c.detail;
    checks.push_back(std::move(item));
  }
  return json{{"passed", r.passed()}, {"checks", std::move(checks)}};
}

json to_json(const InstanceReport& r) {
  json holes = json::array();
  for (const auto& h : r.holes) holes.push_back(to_json(h));
  return json{{"passed", r.passed()},
              {"bull", r.bull ? to_json(*r.bull) : json(nullptr)},
              {"holes", std::move(holes)},
              {"holeLengthsChecked", r.lengths_checked}};
}

json reduction_sidecar(const ReductionArtifact& art) {
  const auto& sub = art.subdivided;
  json labels = json::array();
  for (Vertex v = 0; v < sub.graph.size(); ++v) {
    if (sub.is_original(v)) {
      const auto& l = art.conflict.labels[v];
      labels.push_back({{"vertex", v},
                        {"kind", "original"},
                        {"clause", l.clause},
                        {"position", l.position},
                        {"literal", l.literal}});
    } else {
      const auto& e = sub.edges[sub.edge_of(v)];
      labels.push_back({{"vertex", v},
                        {"kind", "internal"},
                        {"edge", {e.first, e.second}},
                        {"position", sub.position_of(v)}});
    }
  }
  return json{{"p", art.p},
              {"q", art.q},
              {"m", art.formula.num_clauses()},
              {"edgeCountOriginal", art.conflict.edges.size()},
              {"targetK", art.target_k},
              {"labels", std::move(labels)}};
}

namespace {

VertexList vertex_list(const json& j, std::string_view what) {
  if (!j.is_array()) throw ParseError(std::string(what) + " must be an array of vertex ids");
  VertexList out;
  for (const auto& v : j) {
    if (!v.is_number_integer()) throw ParseError(std::string(what) + " must hold integers");
    out.push_back(v.get<Vertex>());
  }
  return out;
}

}  // namespace

T1Structure t1_structure_from_json(const json& doc) {
  if (!doc.is_object() || !doc.contains("X") || !doc.contains("cliques")) {
    throw ParseError("T1 structure needs \"X\" and \"cliques\"");
  }
  T1Structure s;
  s.x = vertex_list(doc["X"], "X");
  if (!doc["cliques"].is_array()) throw ParseError("\"cliques\" must be an array");
  for (const auto& k : doc["cliques"]) s.cliques.push_back(vertex_list(k, "clique"));
  if (doc.contains("aSides")) {
    if (!doc["aSides"].is_array()) throw ParseError("\"aSides\" must be an array");
    for (const auto& a : doc["aSides"]) {
      if (a.is_null()) {
        s.a_sides.emplace_back();
      } else {
        s.a_sides.emplace_back(vertex_list(a, "aSides entry"));
      }
    }
  }
  return s;
}

}  // namespace bullfree::cli
