#pragma once

#include <optional>

#include "lpa/skew.hpp"

namespace lpa {

// Generator of D^s(X): 1_a for a path a, or 1_{f^-1} for an edge f into a
// vertex (keyed by the range vertex; the choice of f is unobservable).
struct DsKey {
  FinPath path;            // nonempty unless inv_vertex is set
  std::string inv_vertex;  // set for the 1_{f^-1} generator

  bool is_inv() const { return !inv_vertex.empty(); }

  bool operator==(const DsKey&) const = default;
  bool operator<(const DsKey& o) const {
    if (inv_vertex != o.inv_vertex) return inv_vertex < o.inv_vertex;
    return path < o.path;
  }

  std::string str() const { return is_inv() ? "1[(" + inv_vertex + ")^-]" : "1[" + path.str() + "]"; }
};

// Element of D^s(X): a finite combination of word indicators, stored as its
// generating presentation (no vertex indicators). Equality goes through the
// shared normal form of the function algebra.
class DsFunction {
 public:
  DsFunction(const Graph& g, Field f) : g_(&g), f_(f) {}

  static DsFunction zero(const Graph& g, Field f) { return DsFunction(g, f); }
  static DsFunction path_indicator(const Graph& g, Field f, const FinPath& p);
  // 1_{f^-1} for some edge f with r(f) = v; requires an incoming edge at v.
  static DsFunction inv_indicator(const Graph& g, Field f, const std::string& v);
  static DsFunction from_terms(const Graph& g, Field f,
                               std::vector<std::pair<DsKey, Scalar>> terms);

  const Graph& graph() const { return *g_; }
  Field field() const { return f_; }
  const std::map<DsKey, Scalar>& terms() const { return terms_; }
  bool presentation_zero() const { return terms_.empty(); }

  DsFunction operator+(const DsFunction& o) const;
  DsFunction operator*(const DsFunction& o) const;
  DsFunction scaled(const Scalar& k) const;

  // The function this presentation denotes, in shared normal form.
  DFunction to_dfunction() const;
  bool same_function(const DsFunction& o) const { return to_dfunction() == o.to_dfunction(); }

  std::string str() const;

 private:
  const Graph* g_;
  Field f_;
  std::map<DsKey, Scalar> terms_;
};

// Replacement of the vertex indicator 1_v inside D^s(X): 1_{f_v^-1} for a
// sink (f_v the least incoming edge), the sum of out-edge indicators for an
// emitting vertex. Throws on isolated vertices.
DsFunction vertex_replacement(const Graph& g, Field f, const std::string& v);

// The defining partial symmetry on generators. Throws when x is outside
// D^s_{f^-1}.
DsFunction beta_generator(const Graph& g, const std::string& edge, const DsFunction& x);

// Composition of generator maps and inverses along the reduced word, with
// domain tracking; nullopt when x leaves the running domain.
std::optional<DsFunction> beta_extend(const Graph& g, const Word& w, const DsFunction& x);

struct BetaViolation {
  Word t, s;
  std::string detail;
};

struct BetaReport {
  std::size_t checks = 0;
  std::vector<BetaViolation> violations;
  bool pass() const { return violations.empty(); }
};

using BetaFn = std::function<std::optional<DsFunction>(const Word&, const DsFunction&)>;

// beta_{ts} = beta_t beta_s whenever |ts| = |t| + |s|, on a spanning set,
// including agreement of domains. `beta` may be substituted to test the
// tester.
BetaReport verify_semi_saturated(const Graph& g, Field f, std::size_t bound,
                                 std::size_t span_depth = 2, BetaFn beta = nullptr);

// Distinct edge ideals multiply to zero and intersect trivially.
BetaReport verify_orthogonality(const Graph& g, Field f);

struct BetaIsoInstance {
  std::string relation;
  std::string subject;
  bool pass;
};

struct BetaIsoReport {
  std::vector<BetaIsoInstance> relations;   // CK relations + unit, beta side
  std::vector<BetaIsoInstance> agreements;  // generator-level beta vs alpha products
  bool pass() const {
    for (const auto& i : relations)
      if (!i.pass) return false;
    for (const auto& i : agreements)
      if (!i.pass) return false;
    return true;
  }
};

// The beta-side generator assignment satisfies the defining relations and
// its generator-level products agree with the alpha realization. Throws on
// graphs with isolated vertices or without edges.
BetaIsoReport iso_agreement_check(const Graph& g, Field f);

}  // namespace lpa
