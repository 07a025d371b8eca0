#include <random>

#include "doctest.h"
#include "hopfcyc/finite_hopf.hpp"

using namespace hopfcyc;

namespace {

Element el(std::initializer_list<std::pair<BasisIndex, long>> terms) {
  Element e;
  for (auto [k, c] : terms) accumulate(e, k, Scalar(c));
  return e;
}

std::vector<FiniteHopf> examples() {
  return {builders::trivial(),
          builders::cyclic_group_algebra(2),
          builders::cyclic_group_algebra(3),
          builders::cyclic_group_algebra(3, FieldSpec{3}),
          builders::function_algebra("Q^Z/3", builders::cyclic_group_table(3), {"0", "1", "2"}),
          builders::sweedler()};
}

}  // namespace

TEST_CASE("builders satisfy the Hopf axioms") {
  for (const auto& h : examples()) {
    INFO(h.name());
    auto const report = check_hopf_axioms(h);
    CHECK_MESSAGE(report.passed(), report.to_text());
  }
}

TEST_CASE("group algebra basics") {
  FiniteHopf const h = builders::cyclic_group_algebra(2);
  CHECK(h.multiply(el({{1, 1}}), el({{1, 1}})) == el({{0, 1}}));
  Tensor<BasisIndex> gg;
  accumulate(gg, std::vector<BasisIndex>{1, 1}, Scalar(1));
  CHECK(h.coproduct(el({{1, 1}})) == gg);
  Character const eps = h.counit_character();
  CHECK(twisted_antipode(h, eps, el({{1, 1}})) == el({{1, 1}}));
  CHECK(check_involution(h, eps).holds);
}

TEST_CASE("Sweedler algebra") {
  FiniteHopf const h = builders::sweedler();
  CHECK(h.multiply(el({{2, 1}}), el({{2, 1}})).empty());
  Tensor<BasisIndex> dx;
  accumulate(dx, std::vector<BasisIndex>{2, 0}, Scalar(1));
  accumulate(dx, std::vector<BasisIndex>{1, 2}, Scalar(1));
  CHECK(h.coproduct(el({{2, 1}})) == dx);
  CHECK(h.format(dx) == "g⊗x + x⊗1");

  Character const delta = h.character("delta");
  CHECK(twisted_antipode(h, delta, el({{2, 1}})) == el({{3, 1}}));
  CHECK(twisted_antipode(h, delta, h.unit()) == h.unit());
  CHECK(twist_automorphism(h, delta, el({{1, 1}})) == el({{1, -1}}));
  CHECK(twist_automorphism(h, delta, el({{2, 1}})) == el({{2, -1}}));

  CHECK(check_involution(h, delta).holds);
  auto const bad = check_involution(h, h.counit_character());
  CHECK(!bad.holds);
  REQUIRE(bad.witness.has_value());
  CHECK(h.label(*bad.witness) == "x");
}

TEST_CASE("twisted properties and S o sigma = S~") {
  for (const auto& h : examples()) {
    for (const auto& name : h.character_names()) {
      INFO(h.name() << " " << name);
      Character const d = h.character(name);
      auto const report = check_twisted_properties(h, d);
      CHECK_MESSAGE(report.passed(), report.to_text());
      CHECK(multiply(antipode_matrix(h), twist_automorphism_matrix(h, d)) ==
            twisted_antipode_matrix(h, d));
      for (BasisIndex a = 0; a < h.dim(); ++a)
        for (BasisIndex b = 0; b < h.dim(); ++b)
          CHECK(twist_automorphism(h, d, h.product(a, b)) ==
                h.multiply(twist_automorphism(h, d, h.basis_element(a)),
                           twist_automorphism(h, d, h.basis_element(b))));
      if (name == "epsilon") CHECK(twisted_antipode_matrix(h, d) == antipode_matrix(h));
    }
  }
}

TEST_CASE("corrupted antipode is caught") {
  auto p = builders::sweedler().presentation();
  p.antipode[2].coef = Scalar(1);
  FiniteHopf const h(p);
  auto const report = check_hopf_axioms(h);
  CHECK(!report.passed());
  const CheckItem* item = report.find_failure("antipode");
  REQUIRE(item != nullptr);
  CHECK(item->witness.find("(x)") != std::string::npos);
  CHECK(report.find_failure("associativity") == nullptr);
}

TEST_CASE("invalid characters are rejected") {
  FiniteHopf const h = builders::sweedler();
  CHECK_THROWS_AS(Character(h, {1, 1, 1, 0}), InvalidCharacter);
  CHECK_THROWS_AS(Character(h, {2, 1, 0, 0}), InvalidCharacter);
  CHECK_THROWS_AS(Character(h, {1, 1}), InvalidCharacter);
  CHECK_THROWS_AS(h.character("nope"), std::out_of_range);
}

TEST_CASE("random characters") {
  FiniteHopf const h = builders::cyclic_group_algebra(4, FieldSpec{4});
  std::vector<Scalar> pool{0, 1, -1, Scalar::zeta(4), Scalar::zeta(4, 3), 2};
  auto const chars = random_characters(h, pool, 20, 1);
  CHECK(chars.size() == 20);
  for (const auto& c : chars) {
    CHECK(c(BasisIndex{0}) == Scalar(1));
    CHECK(check_twisted_properties(h, c).passed());
  }
}

TEST_CASE("cyclotomic characters of Z/3") {
  FiniteHopf const h = builders::cyclic_group_algebra(3, FieldSpec{3});
  auto const names = h.character_names();
  CHECK(names == std::vector<std::string>{"chi_1", "chi_2", "epsilon"});
  CHECK(h.character("chi_1")(BasisIndex{1}) == Scalar::zeta(3));
  CHECK(builders::cyclic_group_algebra(3).character_names() == std::vector<std::string>{"epsilon"});
  CHECK(builders::cyclic_group_algebra(2).character_names() ==
        std::vector<std::string>{"chi_1", "epsilon"});
}
