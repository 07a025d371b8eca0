#include "doctest.h"
#include "hopfcyc/actions.hpp"
#include "hopfcyc/io.hpp"

using namespace hopfcyc;

namespace {

struct TranslationExample {
  FiniteHopf h;
  FiniteAlgebra a;
  HopfAction act;

  explicit TranslationExample(unsigned n)
      : h(builders::group_algebra("Z" + std::to_string(n), builders::cyclic_group_table(n))),
        a(FiniteAlgebra::underlying(
            builders::function_algebra("kZ" + std::to_string(n), builders::cyclic_group_table(n)))),
        act(HopfAction::translation(builders::cyclic_group_table(n))) {}
};

Element el(BasisIndex i) { return LinComb<BasisIndex>{{i, Scalar(1)}}; }

}  // namespace

TEST_CASE("translation action on functions") {
  TranslationExample const ex(3);
  auto const r = check_action(ex.h, ex.a, ex.act);
  CHECK_MESSAGE(r.passed(), r.to_text());
  // g . p_t = p_{t g^-1}: g acting on p_0 gives p_2 in Z/3.
  CHECK(ex.act.apply(1, el(0)) == el(2));
  CHECK(check_action(ex.h, ex.a, HopfAction::trivial(ex.h, ex.a)).passed());

  HopfAction broken = ex.act;
  broken.matrices[1] = ex.act.matrices[2];
  auto const bad = check_action(ex.h, ex.a, broken);
  CHECK(!bad.passed());
  CHECK(bad.find_failure("module_axiom") != nullptr);

  HopfAction wrong_shape = ex.act;
  wrong_shape.matrices.pop_back();
  CHECK(!check_action(ex.h, ex.a, wrong_shape).passed());
}

TEST_CASE("traces and invariance") {
  TranslationExample const ex(3);
  Trace const sum = summation_trace(ex.a);
  Trace const point = coefficient_trace(ex.a, 0);
  CHECK(check_trace(ex.a, sum).passed());
  CHECK(check_trace(ex.a, point).passed());
  CHECK(check_delta_invariance(ex.h, ex.h.counit_character(), ex.a, ex.act, sum).passed());
  auto const r = check_delta_invariance(ex.h, ex.h.counit_character(), ex.a, ex.act, point);
  CHECK(!r.passed());
  CHECK(!r.find_failure("delta_invariance")->witness.empty());

  CHECK(check_trace(FiniteAlgebra::matrices(2), matrix_trace(2)).passed());
  Trace const corner = coefficient_trace(FiniteAlgebra::matrices(2), 0);
  CHECK(!check_trace(FiniteAlgebra::matrices(2), corner).passed());
}

TEST_CASE("characteristic map is a cyclic morphism for invariant traces") {
  TranslationExample const ex(2);
  HopfCyclicModule const hm(ex.h, ex.h.counit_character());
  AlgebraCochainModule const am(ex.a);
  auto const good = check_gamma_morphism(hm, am, ex.act, summation_trace(ex.a), 3);
  CHECK_MESSAGE(good.passed(), good.to_text());

  auto const bad = check_gamma_morphism(hm, am, ex.act, coefficient_trace(ex.a, 0), 3);
  CHECK(!bad.passed());
  for (const auto& item : bad.items()) {
    if (item.id == "gamma_face" || item.id == "gamma_degeneracy") CHECK(item.passed);
  }
  CHECK(bad.find_failure("gamma_cyclic") != nullptr);

  // gamma(1) at degree 0 is the trace itself.
  SparseVector const g0 =
      characteristic_cochain(hm, am, ex.act, summation_trace(ex.a), 0, SparseVector::unit(0));
  CHECK(g0 == SparseVector::from_entries({{0, Scalar(1)}, {1, Scalar(1)}}));
  CHECK(characteristic_map(hm, am, ex.act, summation_trace(ex.a), 2).cols() == 4);
  CHECK(characteristic_map(hm, am, ex.act, summation_trace(ex.a), 2).rows() == 8);
}

TEST_CASE("cyclic cocycle checks") {
  FiniteAlgebra const m2 = FiniteAlgebra::matrices(2);
  AlgebraCochainModule const am(m2);
  Trace const tr = matrix_trace(2);
  auto triple = [&](const std::vector<BasisIndex>& x) {
    return tr(m2.multiply(m2.product(x[0], x[1]), el(x[2])));
  };
  Cochain const trace3 = make_cochain(am, 2, triple);
  auto const good = check_cyclic_cocycle(am, trace3);
  CHECK_MESSAGE(good.passed(), good.to_text());

  Cochain const product_of_traces = make_cochain(am, 2, [&](const std::vector<BasisIndex>& x) {
    return tr(el(x[0])) * tr(el(x[1])) * tr(el(x[2]));
  });
  auto const bad = check_cyclic_cocycle(am, product_of_traces);
  CHECK(bad.find_failure("cyclicity") == nullptr);
  const CheckItem* closed = bad.find_failure("hochschild_closed");
  REQUIRE(closed != nullptr);
  CHECK(closed->witness.find("four-term sum") != std::string::npos);

  AlgebraCochainModule const k(FiniteAlgebra::scalars());
  auto one = [](const std::vector<BasisIndex>&) { return Scalar(1); };
  CHECK(check_cyclic_cocycle(k, make_cochain(k, 4, one)).passed());
  CHECK(check_cyclic_cocycle(k, make_cochain(k, 0, one)).passed());
  auto const odd = check_cyclic_cocycle(k, make_cochain(k, 1, one));
  CHECK(odd.find_failure("cyclicity") != nullptr);
}

TEST_CASE("pairing with idempotents") {
  AlgebraCochainModule const k(FiniteAlgebra::scalars());
  auto one = [](const std::vector<BasisIndex>&) { return Scalar(1); };
  Cochain const c0 = make_cochain(k, 0, one);
  Cochain const c2 = make_cochain(k, 2, one);
  MatrixOverAlgebra e{2, {el(0), el(0), {}, {}}};  // [[1,1],[0,0]]
  CHECK(pair_idempotent(k, c0, e) == Scalar(1));
  CHECK(pair_idempotent(k, c2, e) == Scalar(1));
  MatrixOverAlgebra const not_idem{2, {el(0), el(0), el(0), {}}};
  CHECK_THROWS_AS(pair_idempotent(k, c0, not_idem), NotIdempotent);

  FiniteAlgebra const m2 = FiniteAlgebra::matrices(2);
  AlgebraCochainModule const am(m2);
  Trace const tr = matrix_trace(2);
  Cochain const t0 = make_cochain(am, 0, [&](const std::vector<BasisIndex>& x) { return tr(el(x[0])); });
  Cochain const t2 = make_cochain(am, 2, [&](const std::vector<BasisIndex>& x) {
    return tr(m2.multiply(m2.product(x[0], x[1]), el(x[2])));
  });
  MatrixOverAlgebra const p{2, {el(0), {}, {}, m2.unit()}};  // diag(e11, 1)
  CHECK(pair_idempotent(am, t0, p) == Scalar(3));
  CHECK(pair_idempotent(am, t2, p) == Scalar(3));
  auto const s0 = similarity_invariance(am, t0, p, {}, 8, 5);
  auto const s2 = similarity_invariance(am, t2, p, {}, 8, 5);
  CHECK(s0.invariant);
  CHECK(s2.invariant);
  CHECK(s2.values.size() == 8);

  TranslationExample const ex(3);
  AlgebraCochainModule const fm(ex.a);
  Trace const sum = summation_trace(ex.a);
  Cochain const f2 = make_cochain(fm, 2, [&](const std::vector<BasisIndex>& x) {
    return sum(ex.a.multiply(ex.a.product(x[0], x[1]), el(x[2])));
  });
  CHECK(check_cyclic_cocycle(fm, f2).passed());
  // Units of k^G: 1 + p_0 with inverse 1 - p_0/2.
  Element u = ex.a.unit();
  accumulate(u, 0, Scalar(1));
  Element u_inv = ex.a.unit();
  accumulate(u_inv, 0, Scalar::rational(-1, 2));
  MatrixOverAlgebra const q{2, {el(0), {}, {}, el(1)}};
  auto const s = similarity_invariance(fm, f2, q, {{u, u_inv}}, 8, 11);
  CHECK(s.base == Scalar(2));
  CHECK(s.invariant);
}

TEST_CASE("trace of a triple product on M2 agrees with the exhaustive search") {
  std::string const text =
      hopfcyc::io::read_file(std::string(HOPFCYC_GOLDEN_DIR) + "/matrix_trace_cocycle.txt");
  FiniteAlgebra const m2 = FiniteAlgebra::matrices(2);
  AlgebraCochainModule const am(m2);
  Trace const tr = matrix_trace(2);
  Cochain const phi = make_cochain(am, 2, [&](const std::vector<BasisIndex>& x) {
    return tr(m2.multiply(m2.product(x[0], x[1]), el(x[2])));
  });
  bool const closed = check_cyclic_cocycle(am, phi).find_failure("hochschild_closed") == nullptr;
  CHECK(closed == (text.find("four_term_failures: 0\n") != std::string::npos));
}
