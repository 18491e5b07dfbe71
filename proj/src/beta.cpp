#include "lpa/beta.hpp"

#include <algorithm>
#include <stdexcept>

#include "lpa/lpa_term.hpp"

namespace lpa {

namespace {

bool prefix_of(const FinPath& a, const FinPath& b) {
  if (a.start != b.start || a.length() > b.length()) return false;
  return std::equal(a.edges.begin(), a.edges.end(), b.edges.begin());
}

std::optional<DsKey> key_product(const Graph& g, const DsKey& k1, const DsKey& k2) {
  if (k1.is_inv() && k2.is_inv()) {
    if (k1.inv_vertex == k2.inv_vertex) return k1;
    return std::nullopt;
  }
  if (k1.is_inv()) return key_product(g, k2, k1);
  if (k2.is_inv()) {
    if (k1.path.start == k2.inv_vertex) return k1;
    return std::nullopt;
  }
  if (prefix_of(k1.path, k2.path)) return k2;
  if (prefix_of(k2.path, k1.path)) return k1;
  return std::nullopt;
}

}  // namespace

DsFunction DsFunction::path_indicator(const Graph& g, Field f, const FinPath& p) {
  if (p.edges.empty() || !g.is_composable(p))
    throw std::invalid_argument("path indicator needs a nonempty composable path");
  return from_terms(g, f, {{DsKey{p, ""}, Scalar::one(f)}});
}

DsFunction DsFunction::inv_indicator(const Graph& g, Field f, const std::string& v) {
  if (g.in_edges(v).empty())
    throw std::invalid_argument("1_{f^-1} generator needs an incoming edge at " + v);
  return from_terms(g, f, {{DsKey{{}, v}, Scalar::one(f)}});
}

DsFunction DsFunction::from_terms(const Graph& g, Field f,
                                  std::vector<std::pair<DsKey, Scalar>> terms) {
  DsFunction out(g, f);
  for (auto& [k, s] : terms) {
    if (s.is_zero()) continue;
    auto it = out.terms_.find(k);
    if (it == out.terms_.end())
      out.terms_.emplace(k, s);
    else {
      it->second += s;
      if (it->second.is_zero()) out.terms_.erase(it);
    }
  }
  return out;
}

DsFunction DsFunction::operator+(const DsFunction& o) const {
  std::vector<std::pair<DsKey, Scalar>> ts(terms_.begin(), terms_.end());
  ts.insert(ts.end(), o.terms_.begin(), o.terms_.end());
  return from_terms(*g_, f_, std::move(ts));
}

DsFunction DsFunction::scaled(const Scalar& k) const {
  std::vector<std::pair<DsKey, Scalar>> ts;
  for (const auto& [key, s] : terms_) ts.push_back({key, s * k});
  return from_terms(*g_, f_, std::move(ts));
}

DsFunction DsFunction::operator*(const DsFunction& o) const {
  std::vector<std::pair<DsKey, Scalar>> ts;
  for (const auto& [k1, s1] : terms_)
    for (const auto& [k2, s2] : o.terms_)
      if (auto k = key_product(*g_, k1, k2)) ts.push_back({*k, s1 * s2});
  return from_terms(*g_, f_, std::move(ts));
}

DFunction DsFunction::to_dfunction() const {
  std::vector<std::pair<Cylinder, Scalar>> ts;
  for (const auto& [k, s] : terms_) {
    if (k.is_inv())
      ts.push_back({Cylinder{FinPath{k.inv_vertex, {}}}, s});
    else
      ts.push_back({Cylinder{k.path}, s});
  }
  return DFunction::from_terms(*g_, f_, std::move(ts));
}

std::string DsFunction::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    if (!first) s += " + ";
    first = false;
    if (c == Scalar::one(f_))
      s += k.str();
    else
      s += c.str() + " * " + k.str();
  }
  return s;
}

DsFunction vertex_replacement(const Graph& g, Field f, const std::string& v) {
  switch (g.classify(v)) {
    case VertexClass::Isolated:
      throw std::invalid_argument("vertex " + v + " is isolated");
    case VertexClass::Sink:
      return DsFunction::inv_indicator(g, f, v);
    default: {
      DsFunction acc = DsFunction::zero(g, f);
      for (const auto& e : g.out_edges(v))
        acc = acc + DsFunction::path_indicator(g, f, g.edge_path(e));
      return acc;
    }
  }
}

namespace {

// One generator step. The sign picks beta_f (+1) or beta_{f^-1} (-1).
// Returns nullopt when x is not in the step's domain ideal.
std::optional<DsFunction> beta_letter(const Graph& g, const Letter& l, const DsFunction& x) {
  Field f = x.field();
  DsFunction unit = l.sign > 0 ? DsFunction::inv_indicator(g, f, g.dst(l.edge))
                               : DsFunction::path_indicator(g, f, g.edge_path(l.edge));
  DsFunction proj = unit * x;
  if (!proj.same_function(x)) return std::nullopt;

  std::vector<std::pair<DsKey, Scalar>> ts;
  for (const auto& [k, s] : proj.terms()) {
    if (l.sign > 0) {
      // beta_f(1_{f^-1} 1_h) = 1_f 1_{fh}
      if (k.is_inv()) {
        ts.push_back({DsKey{g.edge_path(l.edge), ""}, s});
      } else {
        FinPath p = g.edge_path(l.edge);
        p.edges.insert(p.edges.end(), k.path.edges.begin(), k.path.edges.end());
        ts.push_back({DsKey{std::move(p), ""}, s});
      }
    } else {
      // beta_{f^-1}(1_f 1_h) = 1_{f^-1} 1_{f^-1 h}; after projection every
      // key is a path starting with f
      if (k.is_inv() || k.path.edges.front() != l.edge)
        throw std::logic_error("beta projection left a key outside X_f");
      if (k.path.length() == 1) {
        ts.push_back({DsKey{{}, g.dst(l.edge)}, s});
      } else {
        FinPath p{g.dst(l.edge),
                  std::vector<std::string>(k.path.edges.begin() + 1, k.path.edges.end())};
        ts.push_back({DsKey{std::move(p), ""}, s});
      }
    }
  }
  return DsFunction::from_terms(g, f, std::move(ts));
}

}  // namespace

DsFunction beta_generator(const Graph& g, const std::string& edge, const DsFunction& x) {
  auto out = beta_letter(g, Letter{edge, 1}, x);
  if (!out) throw std::invalid_argument("beta_" + edge + ": x outside D^s_{" + edge + "^-1}");
  return *out;
}

std::optional<DsFunction> beta_extend(const Graph& g, const Word& w, const DsFunction& x) {
  DsFunction cur = x;
  const auto& ls = w.letters();
  for (auto it = ls.rbegin(); it != ls.rend(); ++it) {
    auto next = beta_letter(g, *it, cur);
    if (!next) return std::nullopt;
    cur = *next;
  }
  return cur;
}

namespace {

void all_reduced_words(const Graph& g, std::size_t bound, Word acc, std::vector<Word>& out) {
  out.push_back(acc);
  if (acc.length() >= bound) return;
  for (const auto& e : g.edges()) {
    for (int sign : {1, -1}) {
      Word next = acc * Word::generator(e.id, sign);
      if (next.length() == acc.length() + 1) all_reduced_words(g, bound, next, out);
    }
  }
}

std::vector<DsFunction> spanning_set(const Graph& g, Field f, std::size_t depth) {
  std::vector<DsFunction> out;
  for (const auto& p : g.paths_up_to(depth)) {
    if (!p.edges.empty()) out.push_back(DsFunction::path_indicator(g, f, p));
  }
  for (const auto& v : g.vertices()) {
    if (!g.in_edges(v).empty()) out.push_back(DsFunction::inv_indicator(g, f, v));
  }
  return out;
}

}  // namespace

BetaReport verify_semi_saturated(const Graph& g, Field f, std::size_t bound,
                                 std::size_t span_depth, BetaFn beta) {
  if (!beta) beta = [&g](const Word& w, const DsFunction& x) { return beta_extend(g, w, x); };
  BetaReport rep;
  std::vector<Word> words;
  all_reduced_words(g, bound, Word::identity(), words);
  auto span = spanning_set(g, f, span_depth);
  for (const auto& t : words) {
    for (const auto& s : words) {
      if (t.length() + s.length() > bound) continue;
      Word ts = t * s;
      if (ts.length() != t.length() + s.length()) continue;
      for (const auto& x : span) {
        ++rep.checks;
        auto direct = beta(ts, x);
        auto inner = beta(s, x);
        std::optional<DsFunction> composed;
        if (inner) composed = beta(t, *inner);
        if (direct.has_value() != composed.has_value()) {
          rep.violations.push_back({t, s, "domain mismatch on " + x.str()});
        } else if (direct && !direct->same_function(*composed)) {
          rep.violations.push_back({t, s, "value mismatch on " + x.str()});
        }
      }
    }
  }
  return rep;
}

BetaReport verify_orthogonality(const Graph& g, Field f) {
  BetaReport rep;
  for (const auto& e1 : g.edges()) {
    for (const auto& e2 : g.edges()) {
      if (e1.id >= e2.id) continue;
      ++rep.checks;
      DsFunction a = DsFunction::path_indicator(g, f, g.edge_path(e1.id));
      DsFunction b = DsFunction::path_indicator(g, f, g.edge_path(e2.id));
      if (!(a * b).to_dfunction().is_zero())
        rep.violations.push_back({Word::generator(e1.id), Word::generator(e2.id),
                                  "1_" + e1.id + " 1_" + e2.id + " != 0"});
    }
  }
  return rep;
}

namespace {

// Element of D^s(X) star_beta F with finite support.
struct BetaElement {
  const Graph* g;
  Field f;
  std::map<Word, DsFunction> comps;

  static BetaElement zero(const Graph& gr, Field fl) { return {&gr, fl, {}}; }

  void add(const Word& w, const DsFunction& r) {
    if (r.to_dfunction().is_zero()) return;
    auto it = comps.find(w);
    if (it == comps.end()) {
      comps.emplace(w, r);
      return;
    }
    DsFunction sum = it->second + r;
    if (sum.to_dfunction().is_zero())
      comps.erase(it);
    else
      it->second = sum;
  }

  BetaElement operator+(const BetaElement& o) const {
    BetaElement out = *this;
    for (const auto& [w, r] : o.comps) out.add(w, r);
    return out;
  }

  // (r d_g)(r' d_h) = beta_g(beta_{g^-1}(r) r') d_{gh}
  std::optional<BetaElement> mul(const BetaElement& o) const {
    BetaElement out = zero(*g, f);
    for (const auto& [gw, r] : comps) {
      for (const auto& [hw, rp] : o.comps) {
        auto pulled = beta_extend(*g, gw.inverse(), r);
        if (!pulled) return std::nullopt;
        auto pushed = beta_extend(*g, gw, *pulled * rp);
        if (!pushed) return std::nullopt;
        out.add(gw * hw, *pushed);
      }
    }
    return out;
  }

  bool same_as(const BetaElement& o) const {
    auto norm = [](const BetaElement& e) {
      std::map<Word, DFunction> m;
      for (const auto& [w, r] : e.comps) {
        DFunction d = r.to_dfunction();
        if (!d.is_zero()) m.emplace(w, d);
      }
      return m;
    };
    return norm(*this) == norm(o);
  }

  bool same_as_skew(const SkewElement& o) const {
    std::map<Word, DFunction> m;
    for (const auto& [w, r] : comps) {
      DFunction d = r.to_dfunction();
      if (!d.is_zero()) m.emplace(w, d);
    }
    return m == o.components();
  }
};

}  // namespace

BetaIsoReport iso_agreement_check(const Graph& g, Field f) {
  if (g.edges().empty()) throw std::invalid_argument("iso check: graph has no edges");
  for (const auto& v : g.vertices()) {
    if (g.classify(v) == VertexClass::Isolated)
      throw std::invalid_argument("iso check: vertex " + v + " is isolated");
  }

  BetaIsoReport rep;
  auto edge_elem = [&](const std::string& e) {
    BetaElement x = BetaElement::zero(g, f);
    x.add(Word::generator(e), DsFunction::path_indicator(g, f, g.edge_path(e)));
    return x;
  };
  auto ghost_elem = [&](const std::string& e) {
    BetaElement x = BetaElement::zero(g, f);
    x.add(Word::generator(e, -1), DsFunction::inv_indicator(g, f, g.dst(e)));
    return x;
  };
  auto vertex_elem = [&](const std::string& v) {
    BetaElement x = BetaElement::zero(g, f);
    x.add(Word::identity(), vertex_replacement(g, f, v));
    return x;
  };
  auto check = [&](const std::string& rel, const std::string& subject,
                   const std::optional<BetaElement>& lhs, const BetaElement& rhs) {
    rep.relations.push_back({rel, subject, lhs && lhs->same_as(rhs)});
  };

  for (const auto& e : g.edges()) {
    BetaElement fe = edge_elem(e.id), fg = ghost_elem(e.id);
    check("CK1", "s(" + e.id + ") " + e.id + " = " + e.id, vertex_elem(e.src).mul(fe), fe);
    check("CK1", e.id + " r(" + e.id + ") = " + e.id, fe.mul(vertex_elem(e.dst)), fe);
    check("CK2", "r(" + e.id + ") " + e.id + "* = " + e.id + "*", vertex_elem(e.dst).mul(fg), fg);
    check("CK2", e.id + "* s(" + e.id + ") = " + e.id + "*", fg.mul(vertex_elem(e.src)), fg);
  }
  for (const auto& e1 : g.edges()) {
    for (const auto& e2 : g.edges()) {
      auto lhs = ghost_elem(e1.id).mul(edge_elem(e2.id));
      BetaElement rhs =
          e1.id == e2.id ? vertex_elem(g.dst(e1.id)) : BetaElement::zero(g, f);
      check("CK3", e1.id + "* " + e2.id + (e1.id == e2.id ? " = r(" + e1.id + ")" : " = 0"), lhs,
            rhs);
    }
  }
  for (const auto& v : g.vertices()) {
    if (g.out_edges(v).empty()) continue;
    std::optional<BetaElement> sum = BetaElement::zero(g, f);
    for (const auto& e : g.out_edges(v)) {
      auto prod = edge_elem(e).mul(ghost_elem(e));
      if (!prod) {
        sum = std::nullopt;
        break;
      }
      sum = *sum + *prod;
    }
    check("CK4", v + " = sum of f f* over s(f) = " + v, sum, vertex_elem(v));
  }
  {
    BetaElement unit = BetaElement::zero(g, f);
    for (const auto& v : g.vertices()) unit = unit + vertex_elem(v);
    bool ok = true;
    for (const auto& e : g.edges()) {
      for (const BetaElement& x : {edge_elem(e.id), ghost_elem(e.id)}) {
        auto l = unit.mul(x);
        auto r = x.mul(unit);
        ok = ok && l && r && l->same_as(x) && r->same_as(x);
      }
    }
    rep.relations.push_back({"unit", "sum of vertex replacements is the identity", ok});
  }

  // generator-level agreement with the alpha realization
  struct Gen {
    std::string label;
    BetaElement beta;
    SkewElement alpha;
  };
  std::vector<Gen> gens;
  for (const auto& e : g.edges()) {
    gens.push_back({e.id, edge_elem(e.id), phi(g, f, LpaTerm::edge(e.id))});
    gens.push_back({e.id + "*", ghost_elem(e.id), phi(g, f, LpaTerm::ghost(e.id))});
  }
  for (const auto& v : g.vertices())
    gens.push_back({v, vertex_elem(v), phi(g, f, LpaTerm::vertex(v))});
  for (const auto& a : gens) {
    for (const auto& b : gens) {
      auto prod = a.beta.mul(b.beta);
      bool ok = prod && prod->same_as_skew(a.alpha * b.alpha);
      rep.agreements.push_back({"beta=alpha", a.label + " . " + b.label, ok});
    }
  }
  return rep;
}

}  // namespace lpa
