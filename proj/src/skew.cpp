#include "lpa/skew.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace lpa {

SkewElement SkewElement::monomial(const DFunction& r, const Word& w) {
  if (!membership(r, w))
    throw std::invalid_argument("skew monomial: component outside D_" + w.str());
  SkewElement out(r.graph(), r.field());
  if (!r.is_zero()) out.comps_.emplace(w, r);
  return out;
}

SkewElement SkewElement::identity(const Graph& g, Field f) {
  SkewElement out(g, f);
  out.comps_.emplace(Word::identity(), DFunction::one(g, f));
  return out;
}

DFunction SkewElement::grade_component(const Word& w) const {
  auto it = comps_.find(w);
  return it == comps_.end() ? DFunction::zero(*g_, f_) : it->second;
}

std::vector<Word> SkewElement::support() const {
  std::vector<Word> out;
  for (const auto& [w, r] : comps_) out.push_back(w);
  return out;
}

void SkewElement::check(const SkewElement& o) const {
  if (g_ != o.g_) throw std::invalid_argument("graph mismatch");
  if (f_ != o.f_) throw std::invalid_argument("field mismatch");
}

void SkewElement::add_term(const Word& w, const DFunction& r) {
  if (r.is_zero()) return;
  auto it = comps_.find(w);
  if (it == comps_.end()) {
    comps_.emplace(w, r);
    return;
  }
  DFunction sum = it->second + r;
  if (sum.is_zero())
    comps_.erase(it);
  else
    it->second = sum;
}

SkewElement SkewElement::operator+(const SkewElement& o) const {
  check(o);
  SkewElement out = *this;
  for (const auto& [w, r] : o.comps_) out.add_term(w, r);
  return out;
}

SkewElement SkewElement::operator-(const SkewElement& o) const {
  return *this + o.scaled(-Scalar::one(f_));
}

SkewElement SkewElement::scaled(const Scalar& k) const {
  SkewElement out(*g_, f_);
  if (k.is_zero()) return out;
  for (const auto& [w, r] : comps_) out.add_term(w, r.scaled(k));
  return out;
}

SkewElement SkewElement::operator*(const SkewElement& o) const {
  check(o);
  SkewElement out(*g_, f_);
  for (const auto& [gw, r] : comps_) {
    for (const auto& [hw, rp] : o.comps_) {
      // (r d_g)(r' d_h) = alpha_g(alpha_{g^-1}(r) r') d_{gh}
      DFunction inner = alpha_apply(gw.inverse(), r) * rp;
      out.add_term(gw * hw, alpha_apply(gw, inner));
    }
  }
  return out;
}

bool SkewElement::operator==(const SkewElement& o) const {
  check(o);
  return comps_ == o.comps_;
}

std::string SkewElement::str() const {
  if (comps_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [w, r] : comps_) {
    if (!first) s += " + ";
    first = false;
    s += "(" + r.str() + ") d[" + w.str() + "]";
  }
  return s;
}

SkewElement SkewElement::parse(const Graph& g, Field f, const std::string& text) {
  SkewElement out(g, f);
  std::string t;
  for (char ch : text)
    if (!isspace(static_cast<unsigned char>(ch))) t += ch;
  if (t.empty() || t == "0") return out;
  std::size_t pos = 0;
  while (pos < t.size()) {
    if (t[pos] != '(') throw std::invalid_argument("expected '(' in skew literal");
    int depth = 1;
    std::size_t end = pos + 1;
    while (end < t.size() && depth > 0) {
      if (t[end] == '(') ++depth;
      if (t[end] == ')') --depth;
      ++end;
    }
    if (depth != 0) throw std::invalid_argument("unbalanced '(' in skew literal");
    std::string df = t.substr(pos + 1, end - pos - 2);
    if (t.compare(end, 2, "d[") != 0) throw std::invalid_argument("expected d[...] in skew literal");
    std::size_t close = t.find(']', end);
    if (close == std::string::npos) throw std::invalid_argument("unterminated d[ in skew literal");
    std::string word = t.substr(end + 2, close - end - 2);
    out = out + monomial(DFunction::parse(g, f, df), Word::parse(word));
    pos = close + 1;
    if (pos < t.size()) {
      if (t[pos] != '+') throw std::invalid_argument("expected '+' in skew literal");
      ++pos;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

std::uint64_t Rng::next() {
  // splitmix64
  s_ += 0x9e3779b97f4a7c15ull;
  std::uint64_t z = s_;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

Scalar random_scalar(Rng& rng, Field f, bool nonzero) {
  for (;;) {
    Scalar s = f.is_rational()
                   ? Scalar(f, static_cast<long>(rng.below(9)) - 4, static_cast<long>(rng.below(3)) + 1)
                   : Scalar(f, static_cast<long>(rng.below(f.p)));
    if (!nonzero || !s.is_zero()) return s;
  }
}

namespace {

FinPath random_path(Rng& rng, const Graph& g, std::size_t depth) {
  const auto& vs = g.vertices();
  FinPath p{vs[rng.below(vs.size())], {}};
  std::size_t len = rng.below(depth + 1);
  for (std::size_t i = 0; i < len; ++i) {
    const auto& out = g.out_edges(g.range(p));
    if (out.empty()) break;
    p.edges.push_back(out[rng.below(out.size())]);
  }
  return p;
}

}  // namespace

DFunction random_dfunction(Rng& rng, const Graph& g, Field f, std::size_t depth,
                           std::size_t terms) {
  std::vector<std::pair<Cylinder, Scalar>> ts;
  std::size_t n = 1 + rng.below(terms);
  for (std::size_t i = 0; i < n; ++i)
    ts.push_back({Cylinder{random_path(rng, g, depth)}, random_scalar(rng, f)});
  return DFunction::from_terms(g, f, std::move(ts));
}

SkewElement random_skew_element(Rng& rng, const Graph& g, Field f, std::size_t depth,
                                std::size_t terms) {
  auto words = nonempty_domain_words(g, depth);
  SkewElement out(g, f);
  std::size_t n = 1 + rng.below(terms);
  for (std::size_t i = 0; i < n; ++i) {
    const Word& w = words[rng.below(words.size())];
    DFunction comp = domain_ideal(g, f, w).unit * random_dfunction(rng, g, f, depth);
    out = out + SkewElement::monomial(comp, w);
  }
  return out;
}

AssocReport check_associativity(const Graph& g, Field f, std::size_t trials, std::size_t depth,
                                std::uint64_t seed, SkewMulFn mul) {
  if (!mul) mul = [](const SkewElement& a, const SkewElement& b) { return a * b; };
  Rng rng(seed);
  AssocReport rep;
  for (std::size_t i = 0; i < trials; ++i) {
    SkewElement x = random_skew_element(rng, g, f, depth);
    SkewElement y = random_skew_element(rng, g, f, depth);
    SkewElement z = random_skew_element(rng, g, f, depth);
    ++rep.trials;
    if (mul(mul(x, y), z) != mul(x, mul(y, z))) rep.violations.push_back({x, y, z});
  }
  return rep;
}

StrongGradingVerdict check_strong_grading(const Graph& g, Field f, std::size_t bound) {
  GlobalVerdict gv = is_global(g);
  StrongGradingVerdict out;
  out.strongly_graded = gv.global;
  out.explanation = gv.explanation;
  out.separating_cell = gv.separating_cell;
  SkewElement id = SkewElement::identity(g, f);
  if (gv.global) {
    out.evidence_verified = true;
    for (const auto& w : nonempty_domain_words(g, bound)) {
      if (w.is_identity()) continue;
      DFunction u = domain_ideal(g, f, w).unit;
      SkewElement x = SkewElement::monomial(u, w);
      SkewElement y = SkewElement::monomial(alpha_apply(w.inverse(), u), w.inverse());
      out.identity_factorizations.push_back({w, {x, y}});
      if (x * y != id) out.evidence_verified = false;
    }
  } else {
    // R_f R_{f^-1} = D_f d_e misses the identity: it vanishes on the
    // separating cell.
    out.missed_element = id;
    const std::string& fe = g.edges().front().id;
    DFunction uf = domain_ideal(g, f, Word::generator(fe)).unit;
    BoundaryPath rep = representative(g, *gv.separating_cell);
    out.evidence_verified =
        uf.evaluate(rep).is_zero() && id.grade_component(Word::identity()).evaluate(rep) == Scalar::one(f);
  }
  return out;
}

// ---------------------------------------------------------------------------
// exact dense linear algebra for the inverse / annihilator searches

namespace {

using Mat = std::vector<std::vector<Scalar>>;

// Reduce [A | b]; returns a solution of A c = b if consistent.
std::optional<std::vector<Scalar>> solve_linear(Mat a, std::vector<Scalar> b, Field f) {
  std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t sel = r;
    while (sel < rows && a[sel][c].is_zero()) ++sel;
    if (sel == rows) continue;
    std::swap(a[sel], a[r]);
    std::swap(b[sel], b[r]);
    Scalar inv = a[r][c].inverse();
    for (std::size_t j = c; j < cols; ++j) a[r][j] *= inv;
    b[r] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c].is_zero()) continue;
      Scalar k = a[i][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] -= k * a[r][j];
      b[i] -= k * b[r];
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i)
    if (!b[i].is_zero()) return std::nullopt;
  std::vector<Scalar> sol(cols, Scalar::zero(f));
  for (std::size_t i = 0; i < pivot_col.size(); ++i) sol[pivot_col[i]] = b[i];
  return sol;
}

// A nonzero vector of the nullspace of A, if any.
std::optional<std::vector<Scalar>> nullspace_vector(Mat a, std::size_t cols, Field f) {
  std::size_t rows = a.size();
  std::vector<long> pivot_of_col(cols, -1);
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t sel = r;
    while (sel < rows && a[sel][c].is_zero()) ++sel;
    if (sel == rows) continue;
    std::swap(a[sel], a[r]);
    Scalar inv = a[r][c].inverse();
    for (std::size_t j = c; j < cols; ++j) a[r][j] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c].is_zero()) continue;
      Scalar k = a[i][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] -= k * a[r][j];
    }
    pivot_of_col[c] = static_cast<long>(r);
    ++r;
  }
  for (std::size_t c = 0; c < cols; ++c) {
    if (pivot_of_col[c] != -1) continue;
    std::vector<Scalar> v(cols, Scalar::zero(f));
    v[c] = Scalar::one(f);
    for (std::size_t j = 0; j < cols; ++j) {
      if (pivot_of_col[j] == -1) continue;
      v[j] = -a[static_cast<std::size_t>(pivot_of_col[j])][c];
    }
    return v;
  }
  return std::nullopt;
}

std::vector<Scalar> vectorize(const DFunction& x, const std::vector<BoundaryPath>& reps) {
  std::vector<Scalar> v;
  v.reserve(reps.size());
  for (const auto& r : reps) v.push_back(x.evaluate(r));
  return v;
}

// Basis of D_w spanned by depth-`depth` partition atoms inside X_w.
std::vector<SkewElement> homogeneous_basis(const Graph& g, Field f, const Word& w,
                                           std::size_t depth) {
  std::vector<SkewElement> basis;
  DFunction u = domain_ideal(g, f, w).unit;
  for (const auto& c : cylinder_partition(g, depth)) {
    DFunction ind = DFunction::indicator(g, f, c);
    if (u * ind == ind) basis.push_back(SkewElement::monomial(ind, w));
  }
  return basis;
}

}  // namespace

InvertOutcome try_invert_homogeneous(const SkewElement& x, std::size_t depth_bound) {
  if (!x.is_homogeneous() || x.is_zero())
    throw std::invalid_argument("try_invert_homogeneous: nonzero homogeneous input required");
  const Graph& g = x.graph();
  Field f = x.field();
  Word gw = x.support().front();
  SkewElement id = SkewElement::identity(g, f);

  // inverse search: solve x y = id, y x = id over candidates at g^{-1}
  auto basis = homogeneous_basis(g, f, gw.inverse(), depth_bound);
  if (!basis.empty()) {
    std::vector<DFunction> left, right;
    std::size_t depth = 0;
    for (const auto& b : basis) {
      left.push_back((x * b).grade_component(Word::identity()));
      right.push_back((b * x).grade_component(Word::identity()));
      depth = std::max({depth, left.back().max_depth(), right.back().max_depth()});
    }
    std::vector<BoundaryPath> reps;
    for (const auto& c : cylinder_partition(g, depth)) reps.push_back(representative(g, c));
    DFunction one = DFunction::one(g, f);
    Mat a(2 * reps.size(), std::vector<Scalar>(basis.size(), Scalar::zero(f)));
    std::vector<Scalar> rhs;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      auto lv = vectorize(left[i], reps);
      auto rv = vectorize(right[i], reps);
      for (std::size_t j = 0; j < reps.size(); ++j) {
        a[j][i] = lv[j];
        a[reps.size() + j][i] = rv[j];
      }
    }
    auto ov = vectorize(one, reps);
    rhs.insert(rhs.end(), ov.begin(), ov.end());
    rhs.insert(rhs.end(), ov.begin(), ov.end());
    if (auto sol = solve_linear(a, rhs, f)) {
      SkewElement y(g, f);
      for (std::size_t i = 0; i < basis.size(); ++i) y = y + basis[i].scaled((*sol)[i]);
      if (x * y == id && y * x == id) return y;
    }
  }

  // annihilator search over homogeneous candidates at small words
  for (const auto& hw : nonempty_domain_words(g, std::min<std::size_t>(depth_bound, 2))) {
    auto zbasis = homogeneous_basis(g, f, hw, depth_bound);
    if (zbasis.empty()) continue;
    for (bool leftside : {true, false}) {
      std::size_t depth = 0;
      std::vector<SkewElement> prods;
      for (const auto& b : zbasis) {
        prods.push_back(leftside ? b * x : x * b);
        for (const auto& [w, r] : prods.back().components()) depth = std::max(depth, r.max_depth());
      }
      std::vector<BoundaryPath> reps;
      for (const auto& c : cylinder_partition(g, depth)) reps.push_back(representative(g, c));
      std::set<Word> words;
      for (const auto& p : prods)
        for (const auto& w : p.support()) words.insert(w);
      std::size_t nrows = std::max<std::size_t>(1, words.size()) * reps.size();
      Mat a(nrows, std::vector<Scalar>(zbasis.size(), Scalar::zero(f)));
      for (std::size_t i = 0; i < zbasis.size(); ++i) {
        std::size_t row = 0;
        for (const auto& w : words) {
          auto v = vectorize(prods[i].grade_component(w), reps);
          for (std::size_t j = 0; j < reps.size(); ++j) a[row + j][i] = v[j];
          row += reps.size();
        }
      }
      if (auto nv = nullspace_vector(a, zbasis.size(), f)) {
        SkewElement z(g, f);
        for (std::size_t i = 0; i < zbasis.size(); ++i) z = z + zbasis[i].scaled((*nv)[i]);
        SkewElement prod = leftside ? z * x : x * z;
        if (!z.is_zero() && prod.is_zero()) return Annihilator{z, leftside};
      }
    }
  }
  return InvertUnknown{depth_bound};
}

}  // namespace lpa
