#include "lpa/graded.hpp"

#include <stdexcept>

namespace lpa {

bool is_loop(const Graph& g) {
  return g.vertices().size() == 1 && g.edges().size() == 1 &&
         g.edges().front().src == g.edges().front().dst;
}

namespace {

void require_edge(const Graph& g) {
  if (g.edges().empty()) throw std::invalid_argument("graph has no edges");
}

std::vector<Scalar> sample_lambdas(Field f) {
  std::vector<Scalar> out;
  if (f.is_rational()) {
    out = {Scalar(f, 1), Scalar(f, -1), Scalar(f, 2), Scalar(f, 1, 2), Scalar(f, 3, 5)};
  } else {
    for (long k = 1; k < static_cast<long>(f.p); ++k) out.push_back(Scalar(f, k));
  }
  return out;
}

// delta-power monomials on the loop graph
SkewElement loop_monomial(const Graph& g, Field f, const Scalar& lambda, long k) {
  const std::string& e = g.edges().front().id;
  const std::string& v = g.vertices().front();
  DFunction one_v = DFunction::indicator(g, f, Cylinder{FinPath{v, {}}});
  return SkewElement::monomial(one_v.scaled(lambda), Word::generator(e).pow(k));
}

Certificate negative_certificate(const Graph& g, Field f) {
  Certificate cert;
  const std::string& fe = g.edges().front().id;
  SkewElement x = SkewElement::monomial(DFunction::indicator(g, f, Cylinder{g.edge_path(fe)}),
                                        Word::generator(fe));
  if (g.edges().size() >= 2) {
    const std::string& le = g.edges()[1].id;
    SkewElement z = SkewElement::monomial(
        DFunction::indicator(g, f, Cylinder{FinPath{g.dst(le), {}}}), Word::generator(le, -1));
    cert.annihilator = AnnihilatorWitness{z, x, true};
  } else {
    // single edge, at least one extra vertex
    std::string w;
    for (const auto& v : g.vertices())
      if (v != g.src(fe)) {
        w = v;
        break;
      }
    SkewElement z = SkewElement::monomial(DFunction::indicator(g, f, Cylinder{FinPath{w, {}}}),
                                          Word::identity());
    cert.annihilator = AnnihilatorWitness{z, x, true};
  }
  cert.separating_cell =
      SeparatingCellWitness{*is_global(g).separating_cell, "cell outside X_" + fe};
  return cert;
}

}  // namespace

bool verify_certificate(const Graph& g, Field f, const Certificate& c) {
  SkewElement id = SkewElement::identity(g, f);
  if (c.loop) {
    if (g.vertices() != std::vector<std::string>{c.loop->vertex}) return false;
    if (g.edges().size() != 1 || g.edges().front().id != c.loop->edge) return false;
    if (g.src(c.loop->edge) != g.dst(c.loop->edge)) return false;
  }
  for (const auto& p : c.inverse_table)
    if (p.x * p.inv != id || p.inv * p.x != id) return false;
  for (const auto& d : c.clean_decomps) {
    if (d.x != d.unit + d.idem) return false;
    if (d.unit * d.unit_inv != id || d.unit_inv * d.unit != id) return false;
    if (d.idem * d.idem != d.idem) return false;
  }
  for (const auto& t : c.triples) {
    if (t.u * t.u_inv != id || t.u_inv * t.u != id) return false;
    if (t.x * t.u * t.x != t.x) return false;
  }
  if (c.annihilator) {
    const auto& a = *c.annihilator;
    if (a.z.is_zero() || a.x.is_zero()) return false;
    if ((a.left ? a.z * a.x : a.x * a.z) != SkewElement::zero(g, f)) return false;
  }
  if (c.separating_cell) {
    const std::string& fe = g.edges().front().id;
    BoundaryPath rep = representative(g, c.separating_cell->cell);
    if (in_cylinder(g, rep, Cylinder{g.edge_path(fe)})) return false;
  }
  return true;
}

Verdict decide_strongly_graded(const Graph& g, Field f) {
  require_edge(g);
  Verdict v;
  v.holds = is_loop(g);
  if (v.holds) {
    v.certificate.loop = LoopStructure{g.vertices().front(), g.edges().front().id};
    Scalar one = Scalar::one(f);
    for (long k = 1; k <= 4; ++k) {
      v.certificate.inverse_table.push_back({loop_monomial(g, f, one, k), loop_monomial(g, f, one, -k)});
      v.certificate.inverse_table.push_back({loop_monomial(g, f, one, -k), loop_monomial(g, f, one, k)});
    }
    v.detail = "loop graph: the action is global and the grading is strong";
  } else {
    v.certificate = negative_certificate(g, f);
    v.detail = is_global(g).explanation;
  }
  v.certificate_verified = verify_certificate(g, f, v.certificate);
  return v;
}

Verdict decide_graded_clean(const Graph& g, Field f) {
  require_edge(g);
  Verdict v;
  v.holds = is_loop(g);
  if (v.holds) {
    v.certificate.loop = LoopStructure{g.vertices().front(), g.edges().front().id};
    SkewElement id = SkewElement::identity(g, f);
    Scalar one = Scalar::one(f);
    for (const Scalar& lam : sample_lambdas(f)) {
      // clean decompositions in R_e (a field): x = unit + idempotent
      SkewElement x = loop_monomial(g, f, lam, 0);
      if (lam == one) {
        v.certificate.clean_decomps.push_back({x, x, x, SkewElement::zero(g, f)});
      } else {
        SkewElement u = loop_monomial(g, f, lam - one, 0);
        v.certificate.clean_decomps.push_back({x, u, loop_monomial(g, f, (lam - one).inverse(), 0), id});
      }
      // every nonzero homogeneous component element is invertible
      for (long k = -4; k <= 4; ++k) {
        if (k == 0) continue;
        v.certificate.inverse_table.push_back(
            {loop_monomial(g, f, lam, k), loop_monomial(g, f, lam.inverse(), -k)});
      }
    }
    v.detail = "R_e is a field (clean) and every nonzero R_g element is invertible";
  } else {
    v.certificate = negative_certificate(g, f);
    v.detail = "homogeneous annihilator witness: some nonzero R_g element is not invertible";
  }
  v.certificate_verified = verify_certificate(g, f, v.certificate);
  return v;
}

Verdict decide_graded_unit_regular(const Graph& g, Field f) {
  require_edge(g);
  Verdict v;
  v.holds = is_loop(g);
  if (v.holds) {
    v.certificate.loop = LoopStructure{g.vertices().front(), g.edges().front().id};
    for (const Scalar& lam : sample_lambdas(f)) {
      for (long k = -4; k <= 4; ++k) {
        SkewElement x = loop_monomial(g, f, lam, k);
        SkewElement u = loop_monomial(g, f, lam.inverse(), -k);
        SkewElement u_inv = loop_monomial(g, f, lam, k);
        v.certificate.triples.push_back({x, u, u_inv});
      }
    }
    v.detail = "x u x = x with homogeneous unit u for sampled homogeneous x";
  } else {
    v.certificate = negative_certificate(g, f);
    v.detail = "homogeneous annihilator witness: no unit can satisfy x u x = x";
  }
  v.certificate_verified = verify_certificate(g, f, v.certificate);
  return v;
}

std::vector<ComponentLemmaEntry> unit_regular_component_lemma_check(const Graph& g, Field f,
                                                                    std::size_t bound) {
  if (!is_loop(g))
    throw std::invalid_argument("component lemma check requires the loop graph");
  SkewElement id = SkewElement::identity(g, f);
  std::vector<ComponentLemmaEntry> out;
  Scalar one = Scalar::one(f);
  for (long k = -static_cast<long>(bound); k <= static_cast<long>(bound); ++k) {
    SkewElement u = loop_monomial(g, f, one, k);
    SkewElement inv = loop_monomial(g, f, one, -k);
    out.push_back({Word::generator(g.edges().front().id).pow(k), u, inv,
                   u * inv == id && inv * u == id});
  }
  return out;
}

LaurentReport laurent_check(const Graph& g, Field f, long n_bound) {
  if (!is_loop(g)) throw std::invalid_argument("laurent check requires the loop graph");
  LaurentReport rep;
  Scalar one = Scalar::one(f);
  for (long m = -n_bound; m <= n_bound; ++m) {
    for (long n = -n_bound; n <= n_bound; ++n) {
      bool ok = loop_monomial(g, f, one, m) * loop_monomial(g, f, one, n) ==
                loop_monomial(g, f, one, m + n);
      rep.entries.push_back({m, n, ok});
    }
  }
  return rep;
}

std::vector<CrosscheckRow> theorem_loop3_crosscheck(const std::vector<Graph>& corpus, Field f) {
  std::vector<CrosscheckRow> rows;
  for (const auto& g : corpus) {
    Verdict s = decide_strongly_graded(g, f);
    Verdict c = decide_graded_clean(g, f);
    Verdict u = decide_graded_unit_regular(g, f);
    rows.push_back({g.name().empty() ? "graph" + std::to_string(rows.size()) : g.name(),
                    s.holds, c.holds, u.holds, is_loop(g),
                    s.certificate_verified && c.certificate_verified && u.certificate_verified});
  }
  return rows;
}

}  // namespace lpa
