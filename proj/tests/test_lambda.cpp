#include <random>

#include "doctest.h"
#include "hopfcyc/lambda.hpp"

using namespace hopfcyc;
using G = Generator;

TEST_CASE("generators as staircases") {
  CHECK(LambdaMorphism::from_generator(G::face(1, 2)).values() == std::vector<long>{0, 2});
  CHECK(LambdaMorphism::from_generator(G::degeneracy(0, 1)).values() == std::vector<long>{0, 0, 1});
  auto const tau = LambdaMorphism::from_generator(G::cyclic(2));
  CHECK(tau.values() == std::vector<long>{2, 3, 4});
  CHECK(tau(0) == 2);
  CHECK(tau(-1) == 1);
}

TEST_CASE("identity is neutral and composition is associative") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    Word const w1 = random_word(rng, 2, 4, 5);
    Word const w2 = random_word(rng, w1.source, 4, 5);
    Word const w3 = random_word(rng, w2.source, 4, 5);
    auto const f = LambdaMorphism::from_word(w1);
    auto const g = LambdaMorphism::from_word(w2);
    auto const h = LambdaMorphism::from_word(w3);
    CHECK(compose(LambdaMorphism::identity(f.target()), f) == f);
    CHECK(compose(f, LambdaMorphism::identity(f.source())) == f);
    CHECK(compose(compose(f, g), h) == compose(f, compose(g, h)));
  }
}

TEST_CASE("tau_n composed n+1 times is the identity") {
  for (unsigned n = 0; n <= 6; ++n) {
    auto const tau = LambdaMorphism::from_generator(G::cyclic(n));
    auto f = LambdaMorphism::identity(n);
    for (unsigned k = 0; k <= n; ++k) {
      if (k > 0) CHECK(f != LambdaMorphism::identity(n));
      f = compose(tau, f);
    }
    CHECK(f == LambdaMorphism::identity(n));
  }
}

TEST_CASE("canonical words reproduce the morphism") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 500; ++trial) {
    std::uniform_int_distribution<unsigned> obj(0, 4);
    Word const w = random_word(rng, obj(rng), 5, 8);
    auto const f = LambdaMorphism::from_word(w);
    Word const c = f.canonical_word();
    CHECK(c.source == f.source());
    CHECK(LambdaMorphism::from_word(c) == f);
    CHECK(LambdaMorphism::from_word(c).canonical_word().to_string() == c.to_string());
  }
}

TEST_CASE("relation catalog holds in normal forms") {
  auto const catalog = relation_catalog(5);
  CHECK(!catalog.empty());
  for (const auto& r : catalog) {
    INFO(r.id << " " << r.instance);
    CHECK(LambdaMorphism::from_word(r.lhs) == LambdaMorphism::from_word(r.rhs));
    CHECK(r.lhs.source == r.rhs.source);
    CHECK(r.lhs.target() == r.rhs.target());
  }
  for (std::size_t k = 1; k < catalog.size(); ++k) CHECK(catalog[k - 1].degree <= catalog[k].degree);
}

TEST_CASE("face identity for i < j in normal forms") {
  for (unsigned n = 1; n <= 4; ++n)
    for (unsigned j = 1; j <= n + 1; ++j)
      for (unsigned i = 0; i < j; ++i) {
        auto const l = LambdaMorphism::from_word(make_word({G::face(j, n + 1), G::face(i, n)}));
        auto const r = LambdaMorphism::from_word(make_word({G::face(i, n + 1), G::face(j - 1, n)}));
        CHECK(l == r);
      }
}

TEST_CASE("invalid input") {
  CHECK_THROWS_AS(make_word({G::face(0, 2), G::face(0, 2)}), NotComposable);
  CHECK_THROWS_AS(compose(LambdaMorphism::identity(1), LambdaMorphism::identity(2)), NotComposable);
  CHECK_THROWS(LambdaMorphism::from_values(1, 1, {1, 0}));
  CHECK_THROWS(LambdaMorphism::from_values(1, 1, {0, 3}));
  CHECK_THROWS(G::face(3, 2));
}
