#pragma once

#include <map>
#include <utility>
#include <vector>

#include "lpa/boundary.hpp"
#include "lpa/scalar.hpp"

namespace lpa {

// Refines a cylinder into the partition atoms of depth d it covers (the
// cylinder itself once it is a singleton or already at depth >= d).
std::vector<Cylinder> refine_cylinder(const Graph& g, const Cylinder& c, std::size_t d);

// Finite K-linear combination of cylinder indicators, kept in canonical
// coarsest-antichain form: equality of functions on the boundary path space
// coincides with structural equality.
class DFunction {
 public:
  DFunction(const Graph& g, Field f) : g_(&g), f_(f) {}

  static DFunction zero(const Graph& g, Field f) { return DFunction(g, f); }
  static DFunction indicator(const Graph& g, Field f, const Cylinder& c);
  // Normalizes the given combination.
  static DFunction from_terms(const Graph& g, Field f,
                              std::vector<std::pair<Cylinder, Scalar>> terms);
  // Sum of all vertex indicators: the constant 1 on X.
  static DFunction one(const Graph& g, Field f);

  const Graph& graph() const { return *g_; }
  Field field() const { return f_; }
  const std::map<Cylinder, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t max_depth() const;

  DFunction operator+(const DFunction& o) const;
  DFunction operator-(const DFunction& o) const;
  DFunction operator*(const DFunction& o) const;  // pointwise
  DFunction scaled(const Scalar& k) const;

  Scalar evaluate(const BoundaryPath& xi) const;

  // Structural equality of normal forms == equality as functions on X.
  bool operator==(const DFunction& o) const;
  bool operator!=(const DFunction& o) const { return !(*this == o); }

  std::string str() const;

  // Textual form: `1[a.b] + -2/3 * 1[v]`; `0` for the zero function.
  static DFunction parse(const Graph& g, Field f, const std::string& text);

 private:
  void check(const DFunction& o) const;

  const Graph* g_;
  Field f_;
  std::map<Cylinder, Scalar> terms_;  // normalized; no zero coefficients
};

}  // namespace lpa
