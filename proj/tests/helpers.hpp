#pragma once

#include <string>
#include <vector>

#include "lpa/graph.hpp"

namespace lpa::testing {

inline Graph make_graph(std::vector<std::string> vs, std::vector<EdgeSpec> es,
                        std::string name = "") {
  return Graph(GraphSpec{std::move(vs), std::move(es), std::move(name)});
}

inline Graph loop_graph() { return make_graph({"v"}, {{"f", "v", "v"}}, "loop"); }

inline Graph rose2_graph() {
  return make_graph({"v"}, {{"a", "v", "v"}, {"b", "v", "v"}}, "rose2");
}

inline Graph a2_graph() { return make_graph({"v", "w"}, {{"f", "v", "w"}}, "a2"); }

inline Graph toeplitz_graph() {
  return make_graph({"v", "w"}, {{"f", "v", "v"}, {"g", "v", "w"}}, "toeplitz");
}

inline std::vector<Graph> corpus() {
  return {loop_graph(), rose2_graph(), a2_graph(), toeplitz_graph()};
}

inline FinPath fp(std::string start, std::vector<std::string> edges = {}) {
  return FinPath{std::move(start), std::move(edges)};
}

}  // namespace lpa::testing
