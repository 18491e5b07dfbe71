#include "lpa/graph.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace lpa {

std::vector<std::string> validate(const GraphSpec& spec) {
  std::vector<std::string> out;
  if (spec.vertices.empty()) out.push_back("graph has no vertices");
  std::set<std::string> vseen, eseen;
  for (const auto& v : spec.vertices) {
    if (!vseen.insert(v).second) out.push_back("duplicate vertex id: " + v);
  }
  for (const auto& e : spec.edges) {
    if (!eseen.insert(e.id).second) out.push_back("duplicate edge id: " + e.id);
    if (!vseen.count(e.src)) out.push_back("edge " + e.id + " has unknown src: " + e.src);
    if (!vseen.count(e.dst)) out.push_back("edge " + e.id + " has unknown dst: " + e.dst);
  }
  return out;
}

std::string to_string(VertexClass c) {
  switch (c) {
    case VertexClass::Sink: return "sink";
    case VertexClass::Source: return "source";
    case VertexClass::Isolated: return "isolated";
    case VertexClass::Regular: return "regular";
    case VertexClass::InfiniteEmitter: return "infinite-emitter";
  }
  return "?";
}

std::string FinPath::str() const {
  if (edges.empty()) return start;
  std::string s;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (i) s += ".";
    s += edges[i];
  }
  return s;
}

Graph::Graph(GraphSpec spec) : spec_(std::move(spec)) {
  auto violations = validate(spec_);
  if (!violations.empty()) {
    std::string msg = "invalid graph";
    for (const auto& v : violations) msg += "; " + v;
    throw std::invalid_argument(msg);
  }
  std::sort(spec_.vertices.begin(), spec_.vertices.end());
  std::sort(spec_.edges.begin(), spec_.edges.end(),
            [](const EdgeSpec& a, const EdgeSpec& b) { return a.id < b.id; });
  for (const auto& v : spec_.vertices) {
    out_[v];
    in_[v];
  }
  for (const auto& e : spec_.edges) {
    edge_by_id_[e.id] = e;
    out_[e.src].push_back(e.id);
    in_[e.dst].push_back(e.id);
  }
}

const std::string& Graph::src(const std::string& edge) const {
  auto it = edge_by_id_.find(edge);
  if (it == edge_by_id_.end()) throw std::invalid_argument("unknown edge id: " + edge);
  return it->second.src;
}

const std::string& Graph::dst(const std::string& edge) const {
  auto it = edge_by_id_.find(edge);
  if (it == edge_by_id_.end()) throw std::invalid_argument("unknown edge id: " + edge);
  return it->second.dst;
}

const std::vector<std::string>& Graph::out_edges(const std::string& v) const {
  auto it = out_.find(v);
  if (it == out_.end()) throw std::invalid_argument("unknown vertex id: " + v);
  return it->second;
}

const std::vector<std::string>& Graph::in_edges(const std::string& v) const {
  auto it = in_.find(v);
  if (it == in_.end()) throw std::invalid_argument("unknown vertex id: " + v);
  return it->second;
}

VertexClass Graph::classify(const std::string& v) const {
  bool no_out = out_edges(v).empty();
  bool no_in = in_edges(v).empty();
  if (no_out && no_in) return VertexClass::Isolated;
  if (no_out) return VertexClass::Sink;
  if (no_in) return VertexClass::Source;
  return VertexClass::Regular;
}

bool Graph::is_composable(const FinPath& p) const {
  if (!has_vertex(p.start)) return false;
  std::string at = p.start;
  for (const auto& e : p.edges) {
    if (!has_edge(e) || src(e) != at) return false;
    at = dst(e);
  }
  return true;
}

const std::string& Graph::range(const FinPath& p) const {
  if (p.edges.empty()) return p.start;
  return dst(p.edges.back());
}

FinPath Graph::vertex_path(const std::string& v) const {
  if (!has_vertex(v)) throw std::invalid_argument("unknown vertex id: " + v);
  return FinPath{v, {}};
}

FinPath Graph::edge_path(const std::string& e) const {
  return FinPath{src(e), {e}};
}

std::vector<FinPath> Graph::paths_up_to(std::size_t d) const {
  std::vector<FinPath> result;
  for (const auto& v : spec_.vertices) result.push_back(FinPath{v, {}});
  std::vector<FinPath> frontier = result;
  for (std::size_t len = 1; len <= d; ++len) {
    std::vector<FinPath> next;
    for (const auto& p : frontier) {
      for (const auto& e : out_edges(range(p))) {
        FinPath q = p;
        q.edges.push_back(e);
        next.push_back(std::move(q));
      }
    }
    result.insert(result.end(), next.begin(), next.end());
    frontier = std::move(next);
    if (frontier.empty()) break;
  }
  std::sort(result.begin(), result.end());
  return result;
}

GraphSpec graph_spec_from_json_text(const std::string& text, const std::string& name) {
  nlohmann::json j = nlohmann::json::parse(text);
  GraphSpec spec;
  spec.name = name;
  for (const auto& v : j.at("vertices")) spec.vertices.push_back(v.get<std::string>());
  for (const auto& e : j.at("edges")) {
    spec.edges.push_back(EdgeSpec{e.at("id").get<std::string>(), e.at("src").get<std::string>(),
                                  e.at("dst").get<std::string>()});
  }
  return spec;
}

Graph graph_from_json_text(const std::string& text, const std::string& name) {
  return Graph(graph_spec_from_json_text(text, name));
}

Graph graph_from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open graph file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return graph_from_json_text(ss.str(), path);
}

}  // namespace lpa
