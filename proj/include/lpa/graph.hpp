#pragma once

#include <map>
#include <string>
#include <vector>

namespace lpa {

struct EdgeSpec {
  std::string id, src, dst;
};

// Raw graph data as read from a file, prior to validation.
struct GraphSpec {
  std::vector<std::string> vertices;
  std::vector<EdgeSpec> edges;
  std::string name;
};

// Each violation names the offending id.
std::vector<std::string> validate(const GraphSpec& spec);

enum class VertexClass { Sink, Source, Isolated, Regular, InfiniteEmitter };

std::string to_string(VertexClass c);

// A finite path: a vertex (no edges) or a composable edge sequence.
struct FinPath {
  std::string start;               // source vertex
  std::vector<std::string> edges;  // edge ids, composable in order

  std::size_t length() const { return edges.size(); }
  bool is_vertex() const { return edges.empty(); }

  bool operator==(const FinPath&) const = default;
  bool operator<(const FinPath& o) const {
    if (edges != o.edges) return edges < o.edges;
    return start < o.start;
  }

  std::string str() const;
};

class Graph {
 public:
  // Throws std::invalid_argument if validate(spec) is nonempty.
  explicit Graph(GraphSpec spec);

  const std::string& name() const { return spec_.name; }
  const std::vector<std::string>& vertices() const { return spec_.vertices; }
  const std::vector<EdgeSpec>& edges() const { return spec_.edges; }

  bool has_vertex(const std::string& v) const { return out_.count(v) != 0; }
  bool has_edge(const std::string& e) const { return edge_by_id_.count(e) != 0; }

  const std::string& src(const std::string& edge) const;
  const std::string& dst(const std::string& edge) const;

  // Edge ids sorted lexicographically.
  const std::vector<std::string>& out_edges(const std::string& v) const;
  const std::vector<std::string>& in_edges(const std::string& v) const;

  bool is_sink(const std::string& v) const { return out_edges(v).empty(); }

  VertexClass classify(const std::string& v) const;

  bool is_composable(const FinPath& p) const;
  // Range vertex of a composable path (the path's start for a vertex path).
  const std::string& range(const FinPath& p) const;

  // All composable paths of length <= d, vertices included, in (edge
  // sequence, start vertex) lexicographic order.
  std::vector<FinPath> paths_up_to(std::size_t d) const;

  FinPath vertex_path(const std::string& v) const;
  FinPath edge_path(const std::string& e) const;

 private:
  GraphSpec spec_;
  std::map<std::string, EdgeSpec> edge_by_id_;
  std::map<std::string, std::vector<std::string>> out_, in_;
};

Graph graph_from_json_text(const std::string& text, const std::string& name = "");
Graph graph_from_file(const std::string& path);
GraphSpec graph_spec_from_json_text(const std::string& text, const std::string& name = "");

}  // namespace lpa
