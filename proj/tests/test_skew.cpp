#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "lpa/skew.hpp"

using namespace lpa;
using namespace lpa::testing;

namespace {

const Field Q = Field::rationals();

DFunction ind(const Graph& g, const FinPath& p) {
  return DFunction::indicator(g, Q, Cylinder{p});
}

SkewElement mono(const Graph& g, const FinPath& p, const std::string& word) {
  return SkewElement::monomial(ind(g, p), Word::parse(word));
}

}  // namespace

TEST_CASE("product rule on monomials") {
  Graph a2 = a2_graph();
  CHECK(mono(a2, fp("w"), "f'") * mono(a2, fp("v"), "f") == mono(a2, fp("w"), "e"));

  Graph loop = loop_graph();
  CHECK(mono(loop, fp("v"), "f") * mono(loop, fp("v"), "f'") == mono(loop, fp("v"), "e"));

  Graph rose2 = rose2_graph();
  CHECK((mono(rose2, fp("v"), "a'") * mono(rose2, fp("v", {"b"}), "b")).is_zero());
}

TEST_CASE("monomial rejects components outside the domain ideal") {
  Graph rose2 = rose2_graph();
  CHECK_THROWS_AS(SkewElement::monomial(ind(rose2, fp("v", {"b"})), Word::parse("a")),
                  std::invalid_argument);
}

TEST_CASE("identity element") {
  Graph loop = loop_graph();
  CHECK(SkewElement::identity(loop, Q) == mono(loop, fp("v"), "e"));
  Graph a2 = a2_graph();
  SkewElement id = SkewElement::identity(a2, Q);
  CHECK(id.grade_component(Word::identity()) == ind(a2, fp("v")) + ind(a2, fp("w")));
  Rng rng(21);
  for (const auto& g : corpus()) {
    SkewElement one = SkewElement::identity(g, Q);
    for (int i = 0; i < 20; ++i) {
      SkewElement x = random_skew_element(rng, g, Q, 2);
      CHECK(one * x == x);
      CHECK(x * one == x);
    }
  }
}

TEST_CASE("grade components and support") {
  Graph loop = loop_graph();
  SkewElement x = mono(loop, fp("v"), "f");
  CHECK(x.grade_component(Word::parse("f")) == ind(loop, fp("v")));
  CHECK(x.grade_component(Word::identity()).is_zero());
  Graph a2 = a2_graph();
  CHECK(SkewElement::identity(a2, Q).support() == std::vector<Word>{Word::identity()});
}

TEST_CASE("grading law and distributivity on random elements") {
  for (const auto& g : corpus()) {
    Rng rng(13);
    for (int i = 0; i < 40; ++i) {
      SkewElement x = random_skew_element(rng, g, Q, 2);
      SkewElement y = random_skew_element(rng, g, Q, 2);
      SkewElement z = random_skew_element(rng, g, Q, 2);
      SkewElement p = x * y;
      for (const auto& [w, comp] : p.components()) {
        bool expected = false;
        for (const auto& [wx, cx] : x.components())
          for (const auto& [wy, cy] : y.components())
            if (wx * wy == w) expected = true;
        CHECK(expected);
        CHECK(membership(comp, w));
      }
      CHECK(x * (y + z) == x * y + x * z);
      CHECK((x + y) * z == x * z + y * z);
    }
  }
}

TEST_CASE("partial isometry identity for every edge") {
  for (const auto& g : corpus()) {
    for (const auto& e : g.edges()) {
      SkewElement fe = SkewElement::monomial(ind(g, g.edge_path(e.id)), Word::generator(e.id));
      SkewElement fg = SkewElement::monomial(ind(g, fp(e.dst)), Word::generator(e.id, -1));
      CHECK(fe * fg * fe == fe);
    }
  }
}

TEST_CASE("associativity: random trials and a corrupted multiplier") {
  for (const auto& g : corpus()) {
    AssocReport rep = check_associativity(g, Q, 100, 3, 2024);
    CHECK(rep.pass());
    CHECK(rep.trials == 100);
  }
  Graph rose2 = rose2_graph();
  SkewMulFn corrupted = [](const SkewElement& x, const SkewElement& y) {
    return x * y + SkewElement::identity(x.graph(), x.field());
  };
  CHECK(!check_associativity(rose2, Q, 50, 2, 2024, corrupted).pass());
}

TEST_CASE("strong grading verdicts with evidence") {
  StrongGradingVerdict loop = check_strong_grading(loop_graph(), Q, 4);
  CHECK(loop.strongly_graded);
  CHECK(loop.evidence_verified);
  CHECK(loop.identity_factorizations.size() >= 8);

  StrongGradingVerdict rose = check_strong_grading(rose2_graph(), Q, 2);
  CHECK(!rose.strongly_graded);
  CHECK(rose.evidence_verified);
  REQUIRE(rose.separating_cell.has_value());
  CHECK(rose.separating_cell->p == fp("v", {"b"}));
  REQUIRE(rose.missed_element.has_value());
  CHECK(!rose.missed_element->is_zero());

  StrongGradingVerdict a2 = check_strong_grading(a2_graph(), Q, 2);
  CHECK(!a2.strongly_graded);
  REQUIRE(a2.separating_cell.has_value());
  CHECK(a2.separating_cell->p == fp("w"));
}

TEST_CASE("homogeneous inversion and annihilators") {
  Graph loop = loop_graph();
  auto inv = try_invert_homogeneous(mono(loop, fp("v"), "f"), 2);
  REQUIRE(std::holds_alternative<SkewElement>(inv));
  CHECK(std::get<SkewElement>(inv) == mono(loop, fp("v"), "f'"));

  Graph rose2 = rose2_graph();
  auto ann = try_invert_homogeneous(mono(rose2, fp("v", {"a"}), "a"), 2);
  REQUIRE(std::holds_alternative<Annihilator>(ann));
  const auto& a = std::get<Annihilator>(ann);
  SkewElement x = mono(rose2, fp("v", {"a"}), "a");
  CHECK(!a.z.is_zero());
  CHECK((a.left ? a.z * x : x * a.z).is_zero());

  Graph a2 = a2_graph();
  auto ann2 = try_invert_homogeneous(mono(a2, fp("v"), "f"), 2);
  REQUIRE(std::holds_alternative<Annihilator>(ann2));
  const auto& a2w = std::get<Annihilator>(ann2);
  SkewElement x2 = mono(a2, fp("v"), "f");
  CHECK((a2w.left ? a2w.z * x2 : x2 * a2w.z).is_zero());

  CHECK_THROWS(try_invert_homogeneous(SkewElement::zero(loop, Q), 2));
}

TEST_CASE("literal parsing round-trips") {
  Graph rose2 = rose2_graph();
  SkewElement x = SkewElement::parse(rose2, Q, "(1[a]) d[a] + (2/3 * 1[v]) d[e]");
  CHECK(SkewElement::parse(rose2, Q, x.str()) == x);
  CHECK(SkewElement::parse(rose2, Q, "0").is_zero());
  CHECK_THROWS(SkewElement::parse(rose2, Q, "(1[b]) d[a]"));  // outside D_a
}

TEST_CASE("random generators are deterministic under a seed") {
  Graph t = toeplitz_graph();
  Rng r1(42), r2(42);
  for (int i = 0; i < 10; ++i) {
    CHECK(random_skew_element(r1, t, Q, 3) == random_skew_element(r2, t, Q, 3));
  }
}
