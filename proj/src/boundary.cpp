#include "lpa/boundary.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace lpa {

namespace {

std::vector<std::string> rotate_left(std::vector<std::string> v, std::size_t k) {
  k %= v.size();
  std::rotate(v.begin(), v.begin() + k, v.end());
  return v;
}

std::vector<std::string> primitive_root(const std::vector<std::string>& c) {
  for (std::size_t p = 1; p <= c.size() / 2; ++p) {
    if (c.size() % p != 0) continue;
    bool ok = true;
    for (std::size_t i = p; i < c.size() && ok; ++i) ok = c[i] == c[i - p];
    if (ok) return std::vector<std::string>(c.begin(), c.begin() + p);
  }
  return c;
}

}  // namespace

BoundaryPath::BoundaryPath(const Graph& g, FinPath prefix, std::vector<std::string> cycle)
    : prefix_(std::move(prefix)), cycle_(std::move(cycle)) {
  if (!g.is_composable(prefix_)) throw std::invalid_argument("boundary path: bad prefix");
  if (cycle_.empty()) {
    if (!g.is_sink(g.range(prefix_)))
      throw std::invalid_argument("finite boundary path must end at a sink");
    return;
  }
  FinPath c{g.range(prefix_), cycle_};
  if (!g.is_composable(c) || g.range(c) != c.start)
    throw std::invalid_argument("boundary path: bad cycle");

  cycle_ = primitive_root(cycle_);
  // shortest prefix realizing the path
  while (!prefix_.edges.empty() && prefix_.edges.back() == cycle_.back()) {
    prefix_.edges.pop_back();
    std::rotate(cycle_.begin(), cycle_.end() - 1, cycle_.end());
  }
}

const std::string& BoundaryPath::edge_at(std::size_t i) const {
  if (i < prefix_.length()) return prefix_.edges[i];
  if (cycle_.empty()) throw std::out_of_range("index past the end of a finite boundary path");
  return cycle_[(i - prefix_.length()) % cycle_.size()];
}

std::string BoundaryPath::str() const {
  if (cycle_.empty()) return prefix_.str();
  std::string c;
  for (std::size_t i = 0; i < cycle_.size(); ++i) {
    if (i) c += ".";
    c += cycle_[i];
  }
  if (prefix_.edges.empty()) return "(" + c + ")^inf";
  return prefix_.str() + ".(" + c + ")^inf";
}

bool in_cylinder(const Graph& g, const BoundaryPath& xi, const Cylinder& c) {
  if (c.is_vertex()) return xi.source() == c.p.start;
  if (xi.is_finite() && xi.length() < c.depth()) return false;
  if (xi.source() != c.p.start) return false;
  for (std::size_t i = 0; i < c.depth(); ++i)
    if (xi.edge_at(i) != c.p.edges[i]) return false;
  (void)g;
  return true;
}

std::vector<Cylinder> cylinder_partition(const Graph& g, std::size_t d) {
  std::vector<Cylinder> result;
  std::vector<FinPath> frontier;
  for (const auto& v : g.vertices()) {
    if (g.is_sink(v))
      result.push_back(Cylinder{FinPath{v, {}}});
    else
      frontier.push_back(FinPath{v, {}});
  }
  for (std::size_t len = 1; len <= d && !frontier.empty(); ++len) {
    std::vector<FinPath> next;
    for (const auto& p : frontier) {
      for (const auto& e : g.out_edges(g.range(p))) {
        FinPath q = p;
        q.edges.push_back(e);
        if (g.is_sink(g.range(q)))
          result.push_back(Cylinder{std::move(q)});
        else
          next.push_back(std::move(q));
      }
    }
    frontier = std::move(next);
  }
  for (auto& p : frontier) result.push_back(Cylinder{std::move(p)});
  std::sort(result.begin(), result.end());
  return result;
}

BoundaryPath representative(const Graph& g, const Cylinder& c) {
  if (!g.is_composable(c.p)) throw std::invalid_argument("cylinder path not composable");
  std::vector<std::string> seq = c.p.edges;
  std::map<std::string, std::size_t> seen;  // vertex -> position within the walk
  std::string at = g.range(c.p);
  seen[at] = seq.size();
  while (!g.is_sink(at)) {
    seq.push_back(g.out_edges(at).front());
    at = g.dst(seq.back());
    auto it = seen.find(at);
    if (it != seen.end()) {
      FinPath prefix{c.p.start, std::vector<std::string>(seq.begin(), seq.begin() + it->second)};
      std::vector<std::string> cycle(seq.begin() + it->second, seq.end());
      return BoundaryPath(g, std::move(prefix), std::move(cycle));
    }
    seen[at] = seq.size();
  }
  return BoundaryPath(g, FinPath{c.p.start, std::move(seq)});
}

namespace {

const std::string& vertex_at(const Graph& g, const BoundaryPath& xi, std::size_t i) {
  if (i == 0) return xi.source();
  return g.dst(xi.edge_at(i - 1));
}

BoundaryPath strip(const Graph& g, const BoundaryPath& xi, std::size_t k) {
  if (k == 0) return xi;
  if (xi.is_finite()) {
    FinPath p{vertex_at(g, xi, k),
              std::vector<std::string>(xi.prefix().edges.begin() + k, xi.prefix().edges.end())};
    return BoundaryPath(g, std::move(p));
  }
  std::size_t plen = xi.length();
  if (k <= plen) {
    FinPath p{vertex_at(g, xi, k),
              std::vector<std::string>(xi.prefix().edges.begin() + k, xi.prefix().edges.end())};
    return BoundaryPath(g, std::move(p), xi.cycle());
  }
  std::size_t m = (k - plen) % xi.cycle().size();
  return BoundaryPath(g, FinPath{vertex_at(g, xi, k), {}}, rotate_left(xi.cycle(), m));
}

BoundaryPath prepend(const Graph& g, const FinPath& a, const BoundaryPath& xi) {
  FinPath p{a.start, a.edges};
  p.edges.insert(p.edges.end(), xi.prefix().edges.begin(), xi.prefix().edges.end());
  return BoundaryPath(g, std::move(p), xi.cycle());
}

}  // namespace

std::optional<BoundaryPath> theta_apply(const Graph& g, const Word& w, const BoundaryPath& xi) {
  GroupShape s = classify(w, g);
  switch (s.kind) {
    case GroupShape::Identity:
      return xi;
    case GroupShape::EmptyDomain:
      return std::nullopt;
    default:
      break;
  }
  // domain X_{w^{-1}}: X_b when b is nonempty, else the vertex cylinder at r(a)
  if (s.b.edges.empty()) {
    if (xi.source() != g.range(s.a)) return std::nullopt;
    return prepend(g, s.a, xi);
  }
  if (!in_cylinder(g, xi, Cylinder{s.b})) return std::nullopt;
  BoundaryPath tail = strip(g, xi, s.b.length());
  if (s.a.edges.empty()) return tail;
  return prepend(g, s.a, tail);
}

std::vector<BoundaryPath> enumerate_boundary_paths(const Graph& g, std::size_t bound) {
  std::set<BoundaryPath> out;
  auto paths = g.paths_up_to(bound);
  for (const auto& p : paths) {
    if (g.is_sink(g.range(p))) out.insert(BoundaryPath(g, p));
  }
  for (const auto& p : paths) {
    for (const auto& c : paths) {
      if (c.edges.empty() || p.length() + c.length() > bound) continue;
      if (c.start != g.range(p) || g.range(c) != c.start) continue;
      out.insert(BoundaryPath(g, p, c.edges));
    }
  }
  return std::vector<BoundaryPath>(out.begin(), out.end());
}

}  // namespace lpa
