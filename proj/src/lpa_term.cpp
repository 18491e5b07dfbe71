#include "lpa/lpa_term.hpp"

#include <cctype>
#include <stdexcept>

namespace lpa {

std::string LpaTerm::str() const {
  switch (kind) {
    case Vertex:
    case Edge:
      return id;
    case Ghost:
      return id + "*";
    case Scaled:
      return std::to_string(coefficient.first) +
             (coefficient.second != 1 ? "/" + std::to_string(coefficient.second) : "") + " * " +
             children[0].str();
    case Prod: {
      std::string s;
      for (std::size_t i = 0; i < children.size(); ++i) {
        if (i) s += " ";
        bool paren = children[i].kind == Sum;
        s += paren ? "(" + children[i].str() + ")" : children[i].str();
      }
      return s;
    }
    case Sum: {
      std::string s;
      for (std::size_t i = 0; i < children.size(); ++i) {
        if (i) s += " + ";
        s += children[i].str();
      }
      return s;
    }
  }
  return "?";
}

namespace {

struct Token {
  enum Kind { Int, Id, Sym, End } kind;
  std::string text;
  std::size_t pos;
};

class Parser {
 public:
  Parser(const Graph& g, const std::string& text) : g_(g), text_(text) { tokenize(); }

  LpaTerm parse() {
    LpaTerm t = sum();
    expect_end();
    return t;
  }

 private:
  [[noreturn]] void fail(const std::string& msg, std::size_t pos) {
    throw std::invalid_argument("parse error at position " + std::to_string(pos) + ": " + msg);
  }

  void tokenize() {
    std::size_t i = 0;
    while (i < text_.size()) {
      char c = text_[i];
      if (std::isspace(static_cast<unsigned char>(c))) {
        ++i;
        continue;
      }
      if (std::isdigit(static_cast<unsigned char>(c))) {
        std::size_t j = i;
        while (j < text_.size() && std::isdigit(static_cast<unsigned char>(text_[j]))) ++j;
        toks_.push_back({Token::Int, text_.substr(i, j - i), i});
        i = j;
      } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        std::size_t j = i;
        while (j < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[j])) ||
                                    text_[j] == '_'))
          ++j;
        toks_.push_back({Token::Id, text_.substr(i, j - i), i});
        i = j;
      } else if (std::string("+-*/()").find(c) != std::string::npos) {
        toks_.push_back({Token::Sym, std::string(1, c), i});
        ++i;
      } else if (c == '\'') {
        fail("`'` is free-group word syntax; ghost edges are written with `*`", i);
      } else {
        fail(std::string("unexpected character `") + c + "`", i);
      }
    }
    toks_.push_back({Token::End, "", text_.size()});
  }

  const Token& peek() const { return toks_[at_]; }
  Token take() { return toks_[at_++]; }
  bool is_sym(const char* s) const { return peek().kind == Token::Sym && peek().text == s; }

  void expect_end() {
    if (peek().kind != Token::End) fail("trailing input `" + peek().text + "`", peek().pos);
  }

  LpaTerm sum() {
    std::vector<LpaTerm> parts{prod()};
    while (is_sym("+") || is_sym("-")) {
      bool neg = take().text == "-";
      LpaTerm p = prod();
      if (neg) parts.push_back(LpaTerm{LpaTerm::Scaled, {std::move(p)}, {-1, 1}, ""});
      else parts.push_back(std::move(p));
    }
    if (parts.size() == 1) return parts[0];
    return LpaTerm{LpaTerm::Sum, std::move(parts), {}, ""};
  }

  bool atom_starts() const {
    return peek().kind == Token::Int || peek().kind == Token::Id || is_sym("(");
  }

  LpaTerm prod() {
    std::vector<LpaTerm> parts;
    if (!atom_starts()) fail("expected a term, got `" + peek().text + "`", peek().pos);
    while (atom_starts()) parts.push_back(atom());
    if (parts.size() == 1) return parts[0];
    return LpaTerm{LpaTerm::Prod, std::move(parts), {}, ""};
  }

  LpaTerm atom() {
    if (peek().kind == Token::Int) {
      Token n = take();
      long num = std::stol(n.text), den = 1;
      if (is_sym("/")) {
        take();
        if (peek().kind != Token::Int) fail("expected denominator", peek().pos);
        den = std::stol(take().text);
        if (den == 0) fail("zero denominator", n.pos);
      }
      if (!is_sym("*")) fail("expected `*` after scalar", peek().pos);
      take();
      return LpaTerm{LpaTerm::Scaled, {atom()}, {num, den}, ""};
    }
    if (is_sym("(")) {
      take();
      LpaTerm t = sum();
      if (!is_sym(")")) fail("expected `)`", peek().pos);
      take();
      return t;
    }
    Token id = take();
    if (is_sym("*")) {
      take();
      if (!g_.has_edge(id.text)) fail("unknown edge id: " + id.text, id.pos);
      return LpaTerm::ghost(id.text);
    }
    if (g_.has_edge(id.text)) return LpaTerm::edge(id.text);
    if (g_.has_vertex(id.text)) return LpaTerm::vertex(id.text);
    fail("unknown generator id: " + id.text, id.pos);
  }

  const Graph& g_;
  const std::string& text_;
  std::vector<Token> toks_;
  std::size_t at_ = 0;
};

}  // namespace

LpaTerm parse_lpa_term(const Graph& g, const std::string& text) {
  return Parser(g, text).parse();
}

SkewElement phi(const Graph& g, Field f, const LpaTerm& t) {
  switch (t.kind) {
    case LpaTerm::Vertex:
      return SkewElement::monomial(
          DFunction::indicator(g, f, Cylinder{FinPath{t.id, {}}}), Word::identity());
    case LpaTerm::Edge:
      return SkewElement::monomial(DFunction::indicator(g, f, Cylinder{g.edge_path(t.id)}),
                                   Word::generator(t.id));
    case LpaTerm::Ghost:
      return SkewElement::monomial(
          DFunction::indicator(g, f, Cylinder{FinPath{g.dst(t.id), {}}}),
          Word::generator(t.id, -1));
    case LpaTerm::Scaled:
      return phi(g, f, t.children[0])
          .scaled(Scalar(f, t.coefficient.first, t.coefficient.second));
    case LpaTerm::Sum: {
      SkewElement acc = SkewElement::zero(g, f);
      for (const auto& c : t.children) acc = acc + phi(g, f, c);
      return acc;
    }
    case LpaTerm::Prod: {
      SkewElement acc = SkewElement::identity(g, f);
      for (const auto& c : t.children) acc = acc * phi(g, f, c);
      return acc;
    }
  }
  throw std::logic_error("unreachable");
}

bool lpa_equals(const Graph& g, Field f, const LpaTerm& t1, const LpaTerm& t2) {
  return phi(g, f, t1) == phi(g, f, t2);
}

CkReport verify_ck(const Graph& g, Field f) {
  CkReport rep;
  auto eq = [&](const SkewElement& a, const SkewElement& b) { return a == b; };
  for (const auto& e : g.edges()) {
    SkewElement fe = phi(g, f, LpaTerm::edge(e.id));
    SkewElement fg = phi(g, f, LpaTerm::ghost(e.id));
    SkewElement sv = phi(g, f, LpaTerm::vertex(e.src));
    SkewElement rv = phi(g, f, LpaTerm::vertex(e.dst));
    rep.instances.push_back({"CK1", "s(" + e.id + ") " + e.id + " = " + e.id, eq(sv * fe, fe)});
    rep.instances.push_back({"CK1", e.id + " r(" + e.id + ") = " + e.id, eq(fe * rv, fe)});
    rep.instances.push_back({"CK2", "r(" + e.id + ") " + e.id + "* = " + e.id + "*", eq(rv * fg, fg)});
    rep.instances.push_back({"CK2", e.id + "* s(" + e.id + ") = " + e.id + "*", eq(fg * sv, fg)});
  }
  for (const auto& e1 : g.edges()) {
    for (const auto& e2 : g.edges()) {
      SkewElement lhs = phi(g, f, LpaTerm::ghost(e1.id)) * phi(g, f, LpaTerm::edge(e2.id));
      SkewElement rhs = e1.id == e2.id ? phi(g, f, LpaTerm::vertex(e1.dst))
                                       : SkewElement::zero(g, f);
      rep.instances.push_back(
          {"CK3", e1.id + "* " + e2.id + (e1.id == e2.id ? " = r(" + e1.id + ")" : " = 0"),
           eq(lhs, rhs)});
    }
  }
  for (const auto& v : g.vertices()) {
    if (g.classify(v) != VertexClass::Regular && g.classify(v) != VertexClass::Source) continue;
    if (g.out_edges(v).empty()) continue;
    SkewElement sum = SkewElement::zero(g, f);
    for (const auto& e : g.out_edges(v))
      sum = sum + phi(g, f, LpaTerm::edge(e)) * phi(g, f, LpaTerm::ghost(e));
    rep.instances.push_back(
        {"CK4", v + " = sum of f f* over s(f) = " + v, eq(phi(g, f, LpaTerm::vertex(v)), sum)});
  }
  return rep;
}

GradeMorphism GradeMorphism::standard_z(const Graph& g) {
  GradeMorphism m;
  for (const auto& e : g.edges()) m.image[e.id] = {1};
  return m;
}

std::vector<long> GradeMorphism::degree(const Word& w) const {
  std::size_t dim = image.empty() ? 1 : image.begin()->second.size();
  std::vector<long> acc(dim, 0);
  for (const auto& l : w.letters()) {
    auto it = image.find(l.edge);
    if (it == image.end()) throw std::invalid_argument("morphism misses edge: " + l.edge);
    for (std::size_t i = 0; i < dim; ++i) acc[i] += l.sign * it->second[i];
  }
  return acc;
}

std::map<std::vector<long>, SkewElement> grade_decompose(const Graph& g, Field f,
                                                         const LpaTerm& t,
                                                         const GradeMorphism& m) {
  SkewElement x = phi(g, f, t);
  std::map<std::vector<long>, SkewElement> out;
  for (const auto& [w, r] : x.components()) {
    auto key = m.degree(w);
    auto it = out.find(key);
    if (it == out.end()) it = out.emplace(key, SkewElement::zero(g, f)).first;
    it->second = it->second + SkewElement::monomial(r, w);
  }
  return out;
}

}  // namespace lpa
