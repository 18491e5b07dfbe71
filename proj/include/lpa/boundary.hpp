#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lpa/free_group.hpp"
#include "lpa/graph.hpp"

namespace lpa {

// Cylinder subset of the boundary path space: X_v for a vertex path, X_a for
// a path of length >= 1.
struct Cylinder {
  FinPath p;

  std::size_t depth() const { return p.length(); }
  bool is_vertex() const { return p.is_vertex(); }

  bool operator==(const Cylinder&) const = default;
  bool operator<(const Cylinder& o) const { return p < o.p; }

  std::string str() const { return "X[" + p.str() + "]"; }
};

// An element of the boundary path space: a finite path ending in a sink
// (cycle empty; bare sink vertices included) or an eventually periodic
// infinite path, stored in normal form (primitive cycle, shortest prefix).
class BoundaryPath {
 public:
  // Throws unless the data describes a boundary path of the graph.
  BoundaryPath(const Graph& g, FinPath prefix, std::vector<std::string> cycle = {});

  static BoundaryPath sink_vertex(const Graph& g, const std::string& v) {
    return BoundaryPath(g, FinPath{v, {}});
  }

  bool is_finite() const { return cycle_.empty(); }
  const FinPath& prefix() const { return prefix_; }
  const std::vector<std::string>& cycle() const { return cycle_; }
  const std::string& source() const { return prefix_.start; }

  // Finite paths only.
  std::size_t length() const { return prefix_.length(); }

  // Edge at position i (0-based); throws past the end of a finite path.
  const std::string& edge_at(std::size_t i) const;

  bool operator==(const BoundaryPath&) const = default;
  bool operator<(const BoundaryPath& o) const {
    if (prefix_ != o.prefix_) return prefix_ < o.prefix_;
    return cycle_ < o.cycle_;
  }

  std::string str() const;

 private:
  FinPath prefix_;
  std::vector<std::string> cycle_;
};

bool in_cylinder(const Graph& g, const BoundaryPath& xi, const Cylinder& c);

// Pairwise-disjoint cylinders covering X: depth-d cylinders at non-sink
// endpoints plus all sink-terminated paths of length <= d.
std::vector<Cylinder> cylinder_partition(const Graph& g, std::size_t d);

// Deterministic representative of a nonempty cylinder: extend along the
// lexicographically least out-edge until a sink or a repeated vertex.
BoundaryPath representative(const Graph& g, const Cylinder& c);

// The set-level partial action: g.xi when xi lies in X_{g^{-1}}, nullopt
// otherwise.
std::optional<BoundaryPath> theta_apply(const Graph& g, const Word& w, const BoundaryPath& xi);

// All boundary paths with |prefix| + |cycle| <= bound (finite-to-sink paths
// of length <= bound and eventually periodic paths of total description
// length <= bound). For exhaustive small-graph checks.
std::vector<BoundaryPath> enumerate_boundary_paths(const Graph& g, std::size_t bound);

}  // namespace lpa
