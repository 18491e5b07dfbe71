#pragma once

#include <string>
#include <vector>

#include "lpa/graph.hpp"

namespace lpa {

// Generator of the free group on edges, or its formal inverse.
struct Letter {
  std::string edge;
  int sign = 1;  // +1 for f, -1 for f^{-1}

  bool operator==(const Letter&) const = default;
  bool operator<(const Letter& o) const {
    if (edge != o.edge) return edge < o.edge;
    return sign < o.sign;
  }
  Letter inverse() const { return Letter{edge, -sign}; }
};

// A reduced word in the free group on the edge alphabet. Always stored
// reduced; the empty word is the identity.
class Word {
 public:
  Word() = default;
  // Reduces the given letter sequence.
  explicit Word(std::vector<Letter> letters);

  static Word identity() { return Word(); }
  static Word generator(const std::string& edge, int sign = 1) {
    return Word({Letter{edge, sign}});
  }
  static Word from_path(const FinPath& p, int sign = 1);

  const std::vector<Letter>& letters() const { return ls_; }
  std::size_t length() const { return ls_.size(); }
  bool is_identity() const { return ls_.empty(); }

  Word operator*(const Word& o) const;
  Word inverse() const;
  Word pow(long k) const;  // word^k, k may be negative

  bool operator==(const Word&) const = default;
  bool operator<(const Word& o) const { return ls_ < o.ls_; }

  // Literal syntax: `.`-separated edge ids, `'` suffix for the inverse,
  // `e` for the identity. Example: "a.b'" is a b^{-1}.
  static Word parse(const std::string& text);
  std::string str() const;

 private:
  std::vector<Letter> ls_;
};

// Shape of the cylinder X_g attached to a reduced word.
struct GroupShape {
  enum Kind { Identity, Path, InvPath, PathPair, EmptyDomain } kind = Identity;
  FinPath a, b;  // Path: a; InvPath: b; PathPair: both

  bool operator==(const GroupShape&) const = default;
};

// Classifies w against the graph: positive-path words, inverse-path words,
// and reduced a b^{-1} with r(a) = r(b) carry nonempty cylinders; everything
// else has X_w empty. Throws on letters naming unknown edges.
GroupShape classify(const Word& w, const Graph& graph);

}  // namespace lpa
