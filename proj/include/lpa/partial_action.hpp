#pragma once

#include <functional>
#include <optional>

#include "lpa/dfunction.hpp"
#include "lpa/free_group.hpp"

namespace lpa {

// D_g described through its generating central idempotent: the whole algebra
// for the identity, 1_a for a b^{-1} shapes, the vertex indicator at r(b) for
// pure inverse words, and the zero ideal when X_g is empty.
struct DomainIdeal {
  GroupShape shape;
  DFunction unit;
};

DomainIdeal domain_ideal(const Graph& g, Field f, const Word& w);

// x in D_w, decided through the generating idempotent.
bool membership(const DFunction& x, const Word& w);

// The algebra-level partial action on generators, extended linearly. Throws
// std::invalid_argument when x lies outside D_{w^{-1}}.
DFunction alpha_apply(const Word& w, const DFunction& x);

struct AxiomViolation {
  std::string axiom;  // "P1", "P2", "P3"
  Word g, h;
  std::string detail;
};

struct AxiomReport {
  std::size_t checks = 0;
  std::vector<AxiomViolation> violations;
  bool pass() const { return violations.empty(); }
};

using AlphaFn = std::function<DFunction(const Word&, const DFunction&)>;

// Checks (P1)-(P3) over all words of length <= bound with nonempty cylinder
// plus a sample of empty-domain words. `alpha` may be substituted to test the
// tester itself.
AxiomReport verify_axioms(const Graph& g, Field f, std::size_t bound,
                          std::size_t span_depth = 2, AlphaFn alpha = nullptr);

struct GlobalVerdict {
  bool global = false;
  std::string explanation;
  std::optional<Cylinder> separating_cell;  // outside X_f for the least edge f
};

// Exact structural criterion for D_f = D_e for every edge f. Throws on an
// edgeless graph.
GlobalVerdict is_global(const Graph& g);

// All reduced words of length <= bound whose cylinder is nonempty, identity
// included, in deterministic order.
std::vector<Word> nonempty_domain_words(const Graph& g, std::size_t bound);

// A few reduced words of length <= bound with empty cylinder (may be empty
// for the loop graph).
std::vector<Word> sample_empty_domain_words(const Graph& g, std::size_t bound,
                                            std::size_t max_count = 5);

}  // namespace lpa
