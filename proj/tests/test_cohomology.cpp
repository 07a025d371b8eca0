#include "doctest.h"
#include "hopfcyc/algebra.hpp"
#include "hopfcyc/cohomology.hpp"

using namespace hopfcyc;

TEST_CASE("trivial Hopf algebra") {
  FiniteHopf const k = builders::trivial();
  HopfCyclicModule const m(k, k.counit_character());
  CHECK(hochschild_b(m, 1).is_zero());
  CHECK(hochschild_b(m, 2) == SparseMatrix::identity(1));
  CHECK(cyclic_B(m, 0) == SparseMatrix::identity(1).scaled(Scalar(2)));
  CHECK(cyclic_B(m, 2) == SparseMatrix::identity(1).scaled(Scalar(6)));
  CHECK(cyclic_B(m, 1).is_zero());
  auto const r = compute_cohomology(m, "epsilon", {});
  CHECK(r.hc_lambda() == std::vector<std::size_t>{1, 0, 1, 0, 1});
  CHECK(r.hc_bB() == std::vector<std::size_t>{1, 0, 1, 0, 1});
  CHECK(r.hh() == std::vector<std::size_t>{1, 0, 0, 0, 0});
  CHECK(r.methods_agree);
  CHECK(r.euler_consistent);
}

TEST_CASE("group algebra b") {
  FiniteHopf const z2 = builders::cyclic_group_algebra(2);
  HopfCyclicModule const m(z2, z2.counit_character());
  // b(g) = 1 (x) g - g (x) g + g (x) 1
  SparseVector const bg = hochschild_b(m, 2).apply(SparseVector::unit(1));
  CHECK(m.format(2, bg) == "1⊗g + g⊗1 - g⊗g");
}

TEST_CASE("mixed complex identities") {
  std::vector<std::pair<FiniteHopf, std::string>> cases{
      {builders::trivial(), "epsilon"},
      {builders::cyclic_group_algebra(2), "epsilon"},
      {builders::cyclic_group_algebra(3), "epsilon"},
      {builders::sweedler(), "delta"}};
  for (const auto& [h, c] : cases) {
    INFO(h.name());
    HopfCyclicModule const m(h, h.character(c));
    auto const report = mixed_complex_suite(m, h.dim() == 4 ? 4 : 5);
    CHECK_MESSAGE(report.passed(), report.to_text());
  }
  AlgebraCochainModule const a(FiniteAlgebra::matrices(2));
  CHECK(mixed_complex_suite(a, 3).passed());
}

TEST_CASE("B refuses without involution") {
  FiniteHopf const h = builders::sweedler();
  HopfCyclicModule const m(h, h.counit_character());
  CHECK_THROWS_AS(cyclic_B(m, 0), NotCyclic);
  CHECK_THROWS_AS(compute_cohomology(m, "epsilon", {}), NotCyclic);
  CHECK_NOTHROW(hochschild_cohomology(m, 2));
}

TEST_CASE("truncation flags") {
  FiniteHopf const z2 = builders::cyclic_group_algebra(2);
  HopfCyclicModule const m(z2, z2.counit_character());
  CohomologyOptions o;
  o.max_degree = 4;
  o.truncation = 4;
  auto const r = compute_cohomology(m, "epsilon", o);
  CHECK(!r.rows[2].boundary_unreliable);
  CHECK(r.rows[3].boundary_unreliable);
  CHECK(r.rows[4].boundary_unreliable);
  CHECK(r.methods_agree);
  CHECK(r.to_text().find("degree 3:") != std::string::npos);
}

TEST_CASE("algebra side cyclic cohomology of k and M2") {
  AlgebraCochainModule const k(FiniteAlgebra::scalars());
  auto const r = compute_cohomology(k, "-", {});
  CHECK(r.hc_lambda() == std::vector<std::size_t>{1, 0, 1, 0, 1});
  CHECK(r.hh() == std::vector<std::size_t>{1, 0, 0, 0, 0});
  CohomologyOptions o;
  o.max_degree = 2;
  AlgebraCochainModule const m2(FiniteAlgebra::matrices(2));
  auto const rm = compute_cohomology(m2, "-", o);
  // Morita invariance: same as k.
  CHECK(rm.hc_lambda() == std::vector<std::size_t>{1, 0, 1});
  CHECK(rm.hc_bB() == std::vector<std::size_t>{1, 0, 1});
  CHECK(rm.hh() == std::vector<std::size_t>{1, 0, 0});
}
