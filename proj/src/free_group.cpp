#include "lpa/free_group.hpp"

#include <stdexcept>

namespace lpa {

Word::Word(std::vector<Letter> letters) {
  for (auto& l : letters) {
    if (l.sign != 1 && l.sign != -1) throw std::invalid_argument("letter sign must be +-1");
    if (!ls_.empty() && ls_.back().edge == l.edge && ls_.back().sign == -l.sign) {
      ls_.pop_back();
    } else {
      ls_.push_back(std::move(l));
    }
  }
}

Word Word::from_path(const FinPath& p, int sign) {
  std::vector<Letter> ls;
  for (const auto& e : p.edges) ls.push_back(Letter{e, sign});
  if (sign < 0) std::reverse(ls.begin(), ls.end());
  return Word(std::move(ls));
}

Word Word::operator*(const Word& o) const {
  std::vector<Letter> ls = ls_;
  ls.insert(ls.end(), o.ls_.begin(), o.ls_.end());
  return Word(std::move(ls));
}

Word Word::inverse() const {
  std::vector<Letter> ls;
  for (auto it = ls_.rbegin(); it != ls_.rend(); ++it) ls.push_back(it->inverse());
  return Word(std::move(ls));
}

Word Word::pow(long k) const {
  Word base = k >= 0 ? *this : inverse();
  Word acc;
  for (long i = 0, n = k >= 0 ? k : -k; i < n; ++i) acc = acc * base;
  return acc;
}

Word Word::parse(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty word literal; the identity is `e`");
  if (text == "e") return Word();
  std::vector<Letter> ls;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t dot = text.find('.', pos);
    std::string tok = text.substr(pos, dot == std::string::npos ? dot : dot - pos);
    if (tok.empty()) throw std::invalid_argument("empty letter in word literal: " + text);
    int sign = 1;
    if (tok.back() == '\'') {
      sign = -1;
      tok.pop_back();
      if (tok.empty()) throw std::invalid_argument("bare inverse mark in word literal: " + text);
    }
    ls.push_back(Letter{tok, sign});
    if (dot == std::string::npos) break;
    pos = dot + 1;
  }
  return Word(std::move(ls));
}

std::string Word::str() const {
  if (ls_.empty()) return "e";
  std::string s;
  for (std::size_t i = 0; i < ls_.size(); ++i) {
    if (i) s += ".";
    s += ls_[i].edge;
    if (ls_[i].sign < 0) s += "'";
  }
  return s;
}

GroupShape classify(const Word& w, const Graph& graph) {
  for (const auto& l : w.letters()) {
    if (!graph.has_edge(l.edge)) throw std::invalid_argument("unknown edge id: " + l.edge);
  }
  if (w.is_identity()) return GroupShape{GroupShape::Identity, {}, {}};

  // A nonempty cylinder requires the shape a b^{-1}: positives then negatives.
  const auto& ls = w.letters();
  std::size_t split = 0;
  while (split < ls.size() && ls[split].sign > 0) ++split;
  for (std::size_t i = split; i < ls.size(); ++i) {
    if (ls[i].sign > 0) return GroupShape{GroupShape::EmptyDomain, {}, {}};
  }

  FinPath a, b;
  if (split > 0) {
    a.start = graph.src(ls[0].edge);
    for (std::size_t i = 0; i < split; ++i) a.edges.push_back(ls[i].edge);
    if (!graph.is_composable(a)) return GroupShape{GroupShape::EmptyDomain, {}, {}};
  }
  if (split < ls.size()) {
    // negatives appear as b^{-1} with b read off back-to-front
    b.start = graph.src(ls.back().edge);
    for (std::size_t i = ls.size(); i-- > split;) b.edges.push_back(ls[i].edge);
    if (!graph.is_composable(b)) return GroupShape{GroupShape::EmptyDomain, {}, {}};
  }

  if (b.edges.empty()) return GroupShape{GroupShape::Path, a, {}};
  if (a.edges.empty()) return GroupShape{GroupShape::InvPath, {}, b};
  if (graph.range(a) != graph.range(b)) return GroupShape{GroupShape::EmptyDomain, {}, {}};
  return GroupShape{GroupShape::PathPair, a, b};
}

}  // namespace lpa
