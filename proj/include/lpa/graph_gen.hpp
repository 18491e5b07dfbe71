#pragma once

#include "lpa/skew.hpp"

namespace lpa {

struct GraphGenOptions {
  std::size_t max_vertices = 5;
  std::size_t max_edges = 8;
  std::size_t min_edges = 1;
  bool forbid_isolated = true;
};

// Seeded random graph, always valid; isolated vertices are dropped when
// forbidden (at least one edge survives, so the graph stays nonempty).
Graph random_graph(Rng& rng, const GraphGenOptions& opt = {},
                   const std::string& name = "random");

std::vector<Graph> random_corpus(std::uint64_t seed, std::size_t count,
                                 const GraphGenOptions& opt = {});

}  // namespace lpa
