#include "lpa/dfunction.hpp"

#include <sstream>
#include <stdexcept>

namespace lpa {

std::vector<Cylinder> refine_cylinder(const Graph& g, const Cylinder& c, std::size_t d) {
  if (c.depth() >= d || g.is_sink(g.range(c.p))) return {c};
  std::vector<Cylinder> out;
  for (const auto& e : g.out_edges(g.range(c.p))) {
    Cylinder child{c.p};
    child.p.edges.push_back(e);
    auto sub = refine_cylinder(g, child, d);
    out.insert(out.end(), sub.begin(), sub.end());
  }
  return out;
}

namespace {

// Canonical form: refine to the common maximal depth, then merge complete
// sibling families with equal coefficients bottom-up.
std::map<Cylinder, Scalar> normalize_terms(const Graph& g,
                                           const std::map<Cylinder, Scalar>& in) {
  std::size_t d = 0;
  for (const auto& [c, k] : in) d = std::max(d, c.depth());

  std::map<Cylinder, Scalar> atoms;
  for (const auto& [c, k] : in) {
    for (const auto& a : refine_cylinder(g, c, d)) {
      auto it = atoms.find(a);
      if (it == atoms.end())
        atoms.emplace(a, k);
      else
        it->second += k;
    }
  }
  for (auto it = atoms.begin(); it != atoms.end();) {
    if (it->second.is_zero())
      it = atoms.erase(it);
    else
      ++it;
  }

  for (std::size_t k = d; k >= 1; --k) {
    // group depth-k atoms by parent
    std::map<FinPath, std::vector<std::map<Cylinder, Scalar>::iterator>> groups;
    for (auto it = atoms.begin(); it != atoms.end(); ++it) {
      if (it->first.depth() != k) continue;
      FinPath parent = it->first.p;
      parent.edges.pop_back();
      groups[parent].push_back(it);
    }
    for (auto& [parent, members] : groups) {
      const auto& fam = g.out_edges(g.range(parent));
      if (members.size() != fam.size()) continue;
      bool equal = true;
      for (std::size_t i = 1; i < members.size() && equal; ++i)
        equal = members[i]->second == members[0]->second;
      if (!equal) continue;
      Scalar coef = members[0]->second;
      for (auto& it : members) atoms.erase(it);
      atoms.emplace(Cylinder{parent}, coef);
    }
  }
  return atoms;
}

}  // namespace

DFunction DFunction::indicator(const Graph& g, Field f, const Cylinder& c) {
  if (!g.is_composable(c.p)) throw std::invalid_argument("cylinder path not composable");
  return from_terms(g, f, {{c, Scalar::one(f)}});
}

DFunction DFunction::from_terms(const Graph& g, Field f,
                                std::vector<std::pair<Cylinder, Scalar>> terms) {
  std::map<Cylinder, Scalar> raw;
  for (auto& [c, k] : terms) {
    if (!g.is_composable(c.p)) throw std::invalid_argument("cylinder path not composable");
    if (k.field() != f) throw std::invalid_argument("coefficient field mismatch");
    auto it = raw.find(c);
    if (it == raw.end())
      raw.emplace(c, k);
    else
      it->second += k;
  }
  DFunction out(g, f);
  out.terms_ = normalize_terms(g, raw);
  return out;
}

DFunction DFunction::one(const Graph& g, Field f) {
  std::vector<std::pair<Cylinder, Scalar>> ts;
  for (const auto& v : g.vertices()) ts.push_back({Cylinder{FinPath{v, {}}}, Scalar::one(f)});
  return from_terms(g, f, std::move(ts));
}

std::size_t DFunction::max_depth() const {
  std::size_t d = 0;
  for (const auto& [c, k] : terms_) d = std::max(d, c.depth());
  return d;
}

void DFunction::check(const DFunction& o) const {
  if (g_ != o.g_) throw std::invalid_argument("graph mismatch");
  if (f_ != o.f_) throw std::invalid_argument("field mismatch");
}

DFunction DFunction::operator+(const DFunction& o) const {
  check(o);
  std::vector<std::pair<Cylinder, Scalar>> ts(terms_.begin(), terms_.end());
  ts.insert(ts.end(), o.terms_.begin(), o.terms_.end());
  return from_terms(*g_, f_, std::move(ts));
}

DFunction DFunction::operator-(const DFunction& o) const {
  return *this + o.scaled(-Scalar::one(f_));
}

DFunction DFunction::scaled(const Scalar& k) const {
  std::vector<std::pair<Cylinder, Scalar>> ts;
  for (const auto& [c, v] : terms_) ts.push_back({c, v * k});
  return from_terms(*g_, f_, std::move(ts));
}

namespace {

// X_a X_b is X of the deeper path when one extends the other, else empty.
bool prefix_of(const FinPath& a, const FinPath& b) {
  if (a.start != b.start || a.length() > b.length()) return false;
  return std::equal(a.edges.begin(), a.edges.end(), b.edges.begin());
}

}  // namespace

DFunction DFunction::operator*(const DFunction& o) const {
  check(o);
  std::vector<std::pair<Cylinder, Scalar>> ts;
  for (const auto& [c1, k1] : terms_) {
    for (const auto& [c2, k2] : o.terms_) {
      if (prefix_of(c1.p, c2.p))
        ts.push_back({c2, k1 * k2});
      else if (prefix_of(c2.p, c1.p))
        ts.push_back({c1, k1 * k2});
    }
  }
  return from_terms(*g_, f_, std::move(ts));
}

Scalar DFunction::evaluate(const BoundaryPath& xi) const {
  Scalar acc = Scalar::zero(f_);
  for (const auto& [c, k] : terms_)
    if (in_cylinder(*g_, xi, c)) acc += k;
  return acc;
}

bool DFunction::operator==(const DFunction& o) const {
  check(o);
  return terms_ == o.terms_;
}

std::string DFunction::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [c, k] : terms_) {
    if (!first) s += " + ";
    first = false;
    if (k == Scalar::one(f_))
      s += "1[" + c.p.str() + "]";
    else
      s += k.str() + " * 1[" + c.p.str() + "]";
  }
  return s;
}

namespace {

Cylinder parse_cylinder(const Graph& g, const std::string& body) {
  std::vector<std::string> toks;
  std::size_t pos = 0;
  while (pos <= body.size()) {
    std::size_t dot = body.find('.', pos);
    toks.push_back(body.substr(pos, dot == std::string::npos ? dot : dot - pos));
    if (dot == std::string::npos) break;
    pos = dot + 1;
  }
  bool all_edges = !toks.empty();
  for (const auto& t : toks) all_edges = all_edges && g.has_edge(t);
  if (all_edges) {
    FinPath p{g.src(toks[0]), toks};
    if (!g.is_composable(p)) throw std::invalid_argument("non-composable path: " + body);
    return Cylinder{p};
  }
  if (toks.size() == 1 && g.has_vertex(toks[0])) return Cylinder{FinPath{toks[0], {}}};
  throw std::invalid_argument("unknown cylinder: " + body);
}

}  // namespace

DFunction DFunction::parse(const Graph& g, Field f, const std::string& text) {
  std::vector<std::pair<Cylinder, Scalar>> ts;
  std::string t;
  for (char ch : text)
    if (!isspace(static_cast<unsigned char>(ch))) t += ch;
  if (t.empty() || t == "0") return zero(g, f);
  std::size_t pos = 0;
  while (pos < t.size()) {
    std::size_t plus = t.find('+', pos);
    std::string term = t.substr(pos, plus == std::string::npos ? plus : plus - pos);
    Scalar coef = Scalar::one(f);
    std::size_t star = term.find('*');
    std::string cyl = term;
    if (star != std::string::npos) {
      std::string num = term.substr(0, star);
      cyl = term.substr(star + 1);
      long n = 0, d = 1;
      std::size_t slash = num.find('/');
      n = std::stol(slash == std::string::npos ? num : num.substr(0, slash));
      if (slash != std::string::npos) d = std::stol(num.substr(slash + 1));
      coef = Scalar(f, n, d);
    }
    if (cyl.size() < 3 || cyl.substr(0, 2) != "1[" || cyl.back() != ']')
      throw std::invalid_argument("bad indicator term: " + term);
    ts.push_back({parse_cylinder(g, cyl.substr(2, cyl.size() - 3)), coef});
    if (plus == std::string::npos) break;
    pos = plus + 1;
  }
  return from_terms(g, f, std::move(ts));
}

}  // namespace lpa
