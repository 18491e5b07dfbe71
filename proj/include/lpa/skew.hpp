#pragma once

#include <cstdint>
#include <variant>

#include "lpa/partial_action.hpp"

namespace lpa {

// Element of the partial skew group ring: finite-support map from reduced
// words to components x_g in D_g.
class SkewElement {
 public:
  SkewElement(const Graph& g, Field f) : g_(&g), f_(f) {}

  static SkewElement zero(const Graph& g, Field f) { return SkewElement(g, f); }
  // r delta_w; requires r in D_w.
  static SkewElement monomial(const DFunction& r, const Word& w);
  // Sum over vertices of 1_v delta_e; the multiplicative identity.
  static SkewElement identity(const Graph& g, Field f);

  const Graph& graph() const { return *g_; }
  Field field() const { return f_; }
  const std::map<Word, DFunction>& components() const { return comps_; }
  bool is_zero() const { return comps_.empty(); }

  DFunction grade_component(const Word& w) const;
  std::vector<Word> support() const;
  bool is_homogeneous() const { return comps_.size() <= 1; }

  SkewElement operator+(const SkewElement& o) const;
  SkewElement operator-(const SkewElement& o) const;
  SkewElement operator*(const SkewElement& o) const;
  SkewElement scaled(const Scalar& k) const;

  bool operator==(const SkewElement& o) const;
  bool operator!=(const SkewElement& o) const { return !(*this == o); }

  std::string str() const;

  // Literal syntax: `(<dfunction>) d[<word>] + ...`.
  static SkewElement parse(const Graph& g, Field f, const std::string& text);

 private:
  void add_term(const Word& w, const DFunction& r);
  void check(const SkewElement& o) const;

  const Graph* g_;
  Field f_;
  std::map<Word, DFunction> comps_;  // no zero components
};

struct AssocViolation {
  SkewElement x, y, z;
};

struct AssocReport {
  std::size_t trials = 0;
  std::vector<AssocViolation> violations;
  bool pass() const { return violations.empty(); }
};

using SkewMulFn = std::function<SkewElement(const SkewElement&, const SkewElement&)>;

// Random-triple associativity check; `mul` may be substituted to test the
// tester.
AssocReport check_associativity(const Graph& g, Field f, std::size_t trials, std::size_t depth,
                                std::uint64_t seed, SkewMulFn mul = nullptr);

struct StrongGradingVerdict {
  bool strongly_graded = false;
  std::string explanation;
  std::optional<Cylinder> separating_cell;
  // Positive evidence: identity written as an element of R_g R_{g^-1} for
  // every |g| <= bound.
  std::vector<std::pair<Word, std::pair<SkewElement, SkewElement>>> identity_factorizations;
  // Negative evidence: an element of R_e outside R_f R_{f^-1}.
  std::optional<SkewElement> missed_element;
  bool evidence_verified = false;
};

StrongGradingVerdict check_strong_grading(const Graph& g, Field f, std::size_t bound);

struct Annihilator {
  SkewElement z;
  bool left;  // true: z x = 0, false: x z = 0
};

struct InvertUnknown {
  std::size_t depth_bound;
};

using InvertOutcome = std::variant<SkewElement, Annihilator, InvertUnknown>;

// For homogeneous x at word g: searches for a homogeneous inverse at g^{-1}
// with components of cylinder depth <= depth_bound (exact linear solve), else
// for a homogeneous annihilator; Unknown when both searches are exhausted.
InvertOutcome try_invert_homogeneous(const SkewElement& x, std::size_t depth_bound);

// Random elements for property checks; deterministic given the rng state.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : s_(seed ? seed : 0x9e3779b97f4a7c15ull) {}
  std::uint64_t next();
  std::uint64_t below(std::uint64_t n) { return n ? next() % n : 0; }

 private:
  std::uint64_t s_;
};

Scalar random_scalar(Rng& rng, Field f, bool nonzero = false);
DFunction random_dfunction(Rng& rng, const Graph& g, Field f, std::size_t depth,
                           std::size_t terms = 3);
SkewElement random_skew_element(Rng& rng, const Graph& g, Field f, std::size_t depth,
                                std::size_t terms = 3);

}  // namespace lpa
