#pragma once

#include <memory>

#include "lpa/skew.hpp"

namespace lpa {

// Expression in the generators of the Leavitt path algebra: vertices v,
// edges f, ghost edges f*, under sum, product, and scalar multiples.
struct LpaTerm {
  enum Kind { Sum, Prod, Scaled, Vertex, Edge, Ghost } kind;
  std::vector<LpaTerm> children;      // Sum, Prod
  std::pair<long, long> coefficient;  // Scaled: numerator / denominator
  std::string id;                     // Vertex, Edge, Ghost

  static LpaTerm vertex(std::string v) { return {Vertex, {}, {}, std::move(v)}; }
  static LpaTerm edge(std::string f) { return {Edge, {}, {}, std::move(f)}; }
  static LpaTerm ghost(std::string f) { return {Ghost, {}, {}, std::move(f)}; }

  std::string str() const;
};

// Grammar: sum := prod (('+'|'-') prod)*; prod := atom+;
// atom := scalar '*' atom | generator | '(' sum ')';
// generator := id | id '*'; scalar := int | int '/' int.
// Throws with a position on syntax errors and on unknown generator ids.
LpaTerm parse_lpa_term(const Graph& g, const std::string& text);

// The realization of the algebra inside the skew ring: phi(f) = 1_f d_f,
// phi(f*) = 1_{f^-1} d_{f^-1}, phi(v) = 1_v d_e, extended linearly and
// multiplicatively.
SkewElement phi(const Graph& g, Field f, const LpaTerm& t);

// Equality in the Leavitt path algebra, decided through phi.
bool lpa_equals(const Graph& g, Field f, const LpaTerm& t1, const LpaTerm& t2);

struct CkInstance {
  std::string relation;  // "CK1".."CK4"
  std::string subject;
  bool pass;
};

struct CkReport {
  std::vector<CkInstance> instances;
  bool pass() const {
    for (const auto& i : instances)
      if (!i.pass) return false;
    return true;
  }
};

// All four relation families for every vertex and edge, under phi.
CkReport verify_ck(const Graph& g, Field f);

// Assignment of an integer vector degree to each edge; the default grades
// every edge by 1 in Z.
struct GradeMorphism {
  std::map<std::string, std::vector<long>> image;

  static GradeMorphism standard_z(const Graph& g);
  std::vector<long> degree(const Word& w) const;
};

// Decomposition of phi(t) by pushing the word grading through the morphism.
std::map<std::vector<long>, SkewElement> grade_decompose(const Graph& g, Field f,
                                                         const LpaTerm& t,
                                                         const GradeMorphism& m);

}  // namespace lpa
