#include "lpa/graph_gen.hpp"

#include <set>

namespace lpa {

Graph random_graph(Rng& rng, const GraphGenOptions& opt, const std::string& name) {
  std::size_t nv = 1 + rng.below(opt.max_vertices);
  std::size_t ne = opt.min_edges + rng.below(opt.max_edges - opt.min_edges + 1);
  GraphSpec spec;
  spec.name = name;
  for (std::size_t i = 0; i < nv; ++i) spec.vertices.push_back("v" + std::to_string(i));
  for (std::size_t i = 0; i < ne; ++i) {
    spec.edges.push_back({"e" + std::to_string(i), spec.vertices[rng.below(nv)],
                          spec.vertices[rng.below(nv)]});
  }
  if (opt.forbid_isolated) {
    std::set<std::string> touched;
    for (const auto& e : spec.edges) {
      touched.insert(e.src);
      touched.insert(e.dst);
    }
    std::erase_if(spec.vertices, [&](const std::string& v) { return !touched.count(v); });
  }
  return Graph(std::move(spec));
}

std::vector<Graph> random_corpus(std::uint64_t seed, std::size_t count,
                                 const GraphGenOptions& opt) {
  Rng rng(seed);
  std::vector<Graph> out;
  for (std::size_t i = 0; i < count; ++i)
    out.push_back(random_graph(rng, opt, "random" + std::to_string(i)));
  return out;
}

}  // namespace lpa
