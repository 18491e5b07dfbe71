#pragma once

#include "lpa/skew.hpp"

namespace lpa {

bool is_loop(const Graph& g);

struct InversePair {
  SkewElement x, inv;
};

// x = unit + idem with unit invertible (inverse shipped) and idem idempotent.
struct CleanDecomp {
  SkewElement x, unit, unit_inv, idem;
};

struct LoopStructure {
  std::string vertex, edge;
};

struct AnnihilatorWitness {
  SkewElement z, x;
  bool left;  // z x = 0 vs x z = 0
};

struct SeparatingCellWitness {
  Cylinder cell;
  std::string note;
};

// Triple product x u x = x with homogeneous unit u (inverse shipped).
struct UnitRegularTriple {
  SkewElement x, u, u_inv;
};

struct Certificate {
  std::optional<LoopStructure> loop;
  std::vector<InversePair> inverse_table;
  std::vector<CleanDecomp> clean_decomps;
  std::vector<UnitRegularTriple> triples;
  std::optional<AnnihilatorWitness> annihilator;
  std::optional<SeparatingCellWitness> separating_cell;
};

struct Verdict {
  bool holds = false;
  Certificate certificate;
  bool certificate_verified = false;
  std::string detail;
};

// Re-runs every claim in the certificate by direct computation.
bool verify_certificate(const Graph& g, Field f, const Certificate& c);

Verdict decide_strongly_graded(const Graph& g, Field f);
Verdict decide_graded_clean(const Graph& g, Field f);
Verdict decide_graded_unit_regular(const Graph& g, Field f);

struct ComponentLemmaEntry {
  Word w;
  SkewElement unit, inverse;
  bool pass;
};

// For the loop graph: an invertible element in every nonzero component R_g,
// |g| <= bound, verified by multiplication.
std::vector<ComponentLemmaEntry> unit_regular_component_lemma_check(const Graph& g, Field f,
                                                                    std::size_t bound);

struct LaurentEntry {
  long m, n;
  bool pass;
};

struct LaurentReport {
  std::vector<LaurentEntry> entries;
  bool pass() const {
    for (const auto& e : entries)
      if (!e.pass) return false;
    return true;
  }
};

// On the loop graph: delta_{f^m} delta_{f^n} multiplication matches the
// Laurent monomial product x^{m+n} for all |m|,|n| <= n_bound.
LaurentReport laurent_check(const Graph& g, Field f, long n_bound);

struct CrosscheckRow {
  std::string graph_name;
  bool strongly_graded, graded_clean, graded_unit_regular, loop;
  bool certificates_verified;
  bool consistent() const {
    return strongly_graded == graded_clean && graded_clean == graded_unit_regular &&
           graded_unit_regular == loop;
  }
};

std::vector<CrosscheckRow> theorem_loop3_crosscheck(const std::vector<Graph>& corpus, Field f);

}  // namespace lpa
