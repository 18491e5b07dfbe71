#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "lpa/skew.hpp"

using namespace lpa;
using namespace lpa::testing;

namespace {

Word random_word(Rng& rng, const std::vector<std::string>& edges, std::size_t max_len) {
  std::vector<Letter> ls;
  std::size_t n = rng.below(max_len + 1);
  for (std::size_t i = 0; i < n; ++i)
    ls.push_back({edges[rng.below(edges.size())], rng.below(2) ? 1 : -1});
  return Word(ls);
}

}  // namespace

TEST_CASE("multiplication reduces") {
  CHECK(Word::generator("f") * Word::generator("f", -1) == Word::identity());
  CHECK(Word::parse("a.b'") * Word::parse("b.a") == Word::parse("a.a"));
  CHECK(Word::identity() * Word::parse("a") == Word::parse("a"));
}

TEST_CASE("inversion") {
  CHECK(Word::parse("a.b'").inverse() == Word::parse("b.a'"));
  CHECK(Word::identity().inverse() == Word::identity());
  CHECK(Word::parse("f.f").inverse() == Word::parse("f'.f'"));
}

TEST_CASE("construction reduces; reduction is idempotent") {
  Word w({{"a", 1}, {"b", 1}, {"b", -1}, {"a", -1}, {"a", 1}});
  CHECK(w == Word::parse("a"));
  CHECK(Word(w.letters()) == w);
}

TEST_CASE("parse and str round-trip") {
  for (const char* text : {"e", "a", "a'", "a.b'", "f.f.f'", "a.a.b"}) {
    Word w = Word::parse(text);
    CHECK(Word::parse(w.str()) == w);
  }
  CHECK(Word::parse("f.f'") == Word::identity());
  CHECK(Word::parse("e").str() == "e");
  CHECK_THROWS(Word::parse(""));
  CHECK_THROWS(Word::parse("a..b"));
}

TEST_CASE("pow") {
  Word f = Word::generator("f");
  CHECK(f.pow(3) == Word::parse("f.f.f"));
  CHECK(f.pow(-2) == Word::parse("f'.f'"));
  CHECK(f.pow(0) == Word::identity());
}

TEST_CASE("classification of cylinder shapes") {
  Graph rose2 = rose2_graph();
  GroupShape s = classify(Word::parse("a.b'"), rose2);
  CHECK(s.kind == GroupShape::PathPair);
  CHECK(s.a == fp("v", {"a"}));
  CHECK(s.b == fp("v", {"b"}));

  CHECK(classify(Word::parse("a'.b"), rose2).kind == GroupShape::EmptyDomain);

  Graph t = toeplitz_graph();
  GroupShape sp = classify(Word::parse("f.g"), t);
  CHECK(sp.kind == GroupShape::Path);
  CHECK(sp.a == fp("v", {"f", "g"}));

  CHECK(classify(Word::identity(), t).kind == GroupShape::Identity);
  GroupShape si = classify(Word::parse("g'.f'"), t);
  CHECK(si.kind == GroupShape::InvPath);
  CHECK(si.b == fp("v", {"f", "g"}));
  // non-composable positive word
  CHECK(classify(Word::parse("g.f"), t).kind == GroupShape::EmptyDomain);
  // composable pair with r(a) != r(b) carries an empty cylinder
  CHECK(classify(Word::parse("f.g'"), t).kind == GroupShape::EmptyDomain);
  CHECK(classify(Word::parse("g.f'"), t).kind == GroupShape::EmptyDomain);
  CHECK_THROWS(classify(Word::parse("zzz"), t));
}

TEST_CASE("random words: no cancelling pairs, length subadditive, inverse law") {
  Graph rose2 = rose2_graph();
  std::vector<std::string> edges{"a", "b"};
  Rng rng(17);
  for (int i = 0; i < 300; ++i) {
    Word w1 = random_word(rng, edges, 6), w2 = random_word(rng, edges, 6);
    Word p = w1 * w2;
    const auto& ls = p.letters();
    for (std::size_t k = 0; k + 1 < ls.size(); ++k)
      CHECK(!(ls[k].edge == ls[k + 1].edge && ls[k].sign == -ls[k + 1].sign));
    CHECK(p.length() <= w1.length() + w2.length());
    CHECK(w1 * w1.inverse() == Word::identity());
    GroupShape s = classify(w1, rose2);
    if (s.kind == GroupShape::PathPair)
      CHECK(Word::from_path(s.a) * Word::from_path(s.b).inverse() == w1);
  }
}
