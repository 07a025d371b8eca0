#include <random>

#include "doctest.h"
#include "hopfcyc/algebra.hpp"
#include "hopfcyc/cyclic_module.hpp"

using namespace hopfcyc;

namespace {

SparseVector tuple_vector(const HopfCyclicModule& m, std::vector<BasisIndex> t) {
  return SparseVector::unit(m.encode(t));
}

HopfCyclicModule h4(const char* character) {
  FiniteHopf h = builders::sweedler();
  Character d = h.character(character);
  return {h, d};
}

}  // namespace

TEST_CASE("face, degeneracy and cyclic examples") {
  FiniteHopf const z2 = builders::cyclic_group_algebra(2);
  HopfCyclicModule const m(z2, z2.counit_character());
  CHECK(m.face(1, 2).apply(tuple_vector(m, {1})) != SparseVector());
  // delta_1 on g (x) g at degree 3 splits slot 1.
  CHECK(m.face(1, 3).apply(tuple_vector(m, {1, 1})) == tuple_vector(m, {1, 1, 1}));
  CHECK(m.face(0, 1).apply(SparseVector::unit(0)) == tuple_vector(m, {0}));
  CHECK(m.face(1, 1).apply(SparseVector::unit(0)) == tuple_vector(m, {0}));
  CHECK(m.degeneracy(0, 1).apply(tuple_vector(m, {1, 1})) == tuple_vector(m, {1}));
  CHECK(m.cyclic(1).apply(tuple_vector(m, {1})) == tuple_vector(m, {1}));
  CHECK(m.cyclic(2).apply(tuple_vector(m, {1, 1})) == tuple_vector(m, {0, 1}));
  CHECK(m.cyclic(0) == SparseMatrix::identity(1));

  HopfCyclicModule const s = h4("delta");
  // x (x) g -> x (x) g (x) 1
  CHECK(s.face(3, 3).apply(tuple_vector(s, {2, 1})) == tuple_vector(s, {2, 1, 0}));
  // x (x) g -> x (x) g (x) g
  CHECK(s.face(2, 3).apply(tuple_vector(s, {2, 1})) == tuple_vector(s, {2, 1, 1}));
  CHECK(s.degeneracy(0, 1).apply(tuple_vector(s, {2, 1})).empty());
  CHECK(s.degeneracy(1, 1).apply(tuple_vector(s, {3, 0})) == tuple_vector(s, {3}));
  CHECK(s.basis_label(2, s.encode({2, 1})) == "x⊗g");
}

TEST_CASE("parallel assembly matches the element-level reference") {
  for (const char* c : {"delta", "epsilon"}) {
    HopfCyclicModule const m = h4(c);
    for (unsigned n = 0; n <= 3; ++n) {
      CHECK(m.assemble_cyclic(n) == m.reference_cyclic(n));
      for (unsigned i = 0; i <= n; ++i) {
        if (n >= 1) CHECK(m.assemble_face(i, n) == m.reference_face(i, n));
        CHECK(m.assemble_degeneracy(i, n) == m.reference_degeneracy(i, n));
      }
    }
  }
}

TEST_CASE("tau_2 expansion on random H4 elements") {
  HopfCyclicModule const m = h4("delta");
  const FiniteHopf& h = m.hopf();
  std::mt19937_64 rng(9);
  for (const auto& f : random_pure_tensors(h, 2, 20, rng)) {
    // tau_2(h1 (x) h2) = sum S(h1_(2)) h2 (x) S~(h1_(1))
    Tensor<BasisIndex> expected;
    for (const auto& [pair, c] : h.coproduct(f[0])) {
      accumulate_all(expected,
                     tensor::pure<BasisIndex>({h.multiply(h.antipode(pair[1]), f[1]),
                                               twisted_antipode(h, m.character(),
                                                                h.basis_element(pair[0]))}),
                     c);
    }
    auto const t = tensor::pure<BasisIndex>(f);
    CHECK(m.to_tensor(2, m.cyclic(2).apply(m.from_tensor(t))) == expected);
  }
}

TEST_CASE("relation suites") {
  HopfCyclicModule const good = h4("delta");
  auto const report = relation_suite(good, 3);
  CHECK_MESSAGE(report.passed(), report.to_text());

  HopfCyclicModule const bad = h4("epsilon");
  auto const failing = relation_suite(bad, 2);
  CHECK(!failing.passed());
  const CheckItem* item = failing.find_failure("tau_power");
  REQUIRE(item != nullptr);
  CHECK(item->witness.find("x") != std::string::npos);
  CHECK(bad.cyclicity_obstruction().has_value());
  CHECK(!good.cyclicity_obstruction().has_value());
  // Simplicial identities do not depend on the character.
  for (const auto& it : failing.items()) {
    if (it.id.rfind("tau", 0) != 0) CHECK(it.passed);
  }
}

TEST_CASE("algebra cochain module") {
  AlgebraCochainModule const k(FiniteAlgebra::scalars());
  for (unsigned n = 0; n <= 4; ++n) CHECK(k.cyclic(n) == SparseMatrix::identity(1));
  AlgebraCochainModule const m2(FiniteAlgebra::matrices(2));
  auto const report = relation_suite(m2, 3);
  CHECK_MESSAGE(report.passed(), report.to_text());
  CHECK(multiply(m2.cyclic(1), m2.cyclic(1)) == SparseMatrix::identity(16));

  FiniteHopf const z2 = builders::cyclic_group_algebra(2);
  AlgebraCochainModule const a(FiniteAlgebra::underlying(z2));
  // (sigma_1 psi)(x0, x1) = psi(x0, x1, 1): the dual vector (e,g,e)* pulls back to (e,g)*.
  auto const img = a.degeneracy(1, 1).apply(SparseVector::unit(a.encode({0, 1, 0})));
  CHECK(img == SparseVector::unit(a.encode({0, 1})));
  // sigma_0 inserts 1 after x0.
  auto const img0 = a.degeneracy(0, 1).apply(SparseVector::unit(a.encode({1, 0, 1})));
  CHECK(img0 == SparseVector::unit(a.encode({1, 1})));
  CHECK(relation_suite(a, 3).passed());
}

TEST_CASE("functoriality and normal forms") {
  CHECK(normal_form_suite(4).passed());
  HopfCyclicModule const m = h4("delta");
  auto const report = functoriality_suite(m, 3, 40, 1);
  CHECK_MESSAGE(report.passed(), report.to_text());
  CHECK(word_matrix(m, Word{2, {}}) == SparseMatrix::identity(16));
  CHECK(word_matrix(m, make_word({Generator::cyclic(2), Generator::face(0, 2)})) == m.face(2, 2));
  CHECK(word_matrix(m, make_word({Generator::cyclic(2), Generator::degeneracy(0, 2)})) ==
        word_matrix(m, make_word({Generator::degeneracy(2, 2), Generator::cyclic(3),
                                  Generator::cyclic(3)})));
}

TEST_CASE("cyclic power formula on finite examples") {
  std::mt19937_64 rng(4);
  for (FiniteHopf h : {builders::sweedler(), builders::cyclic_group_algebra(3)}) {
    Character const d = h.character_names().front() == "delta" ? h.character("delta")
                                                               : h.counit_character();
    FiniteHopfModel const model(h, d);
    std::vector<std::vector<Element>> samples;
    for (unsigned n = 1; n <= 3; ++n) {
      auto const s = random_pure_tensors(h, n, 10, rng);
      samples.insert(samples.end(), s.begin(), s.end());
    }
    auto const report = symbolic::cyclic_power_suite(model, samples, [&](const Tensor<BasisIndex>& t) {
      return h.format(t);
    });
    CHECK_MESSAGE(report.passed(), report.to_text());
  }
}
