// One line per acceptance criterion; exit status 1 if any fails.

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <regex>
#include <sstream>

#include "hopfcyc/actions.hpp"
#include "hopfcyc/cohomology.hpp"
#include "hopfcyc/enveloping.hpp"
#include "hopfcyc/io.hpp"

using namespace hopfcyc;

namespace {

struct Outcome {
  bool passed = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      passed = false;
      detail += (detail.empty() ? "" : "; ") + what;
    }
  }
};

double seconds_since(std::chrono::steady_clock::time_point t) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t).count();
}

std::string first_failure(const CheckReport& r) {
  for (const auto& item : r.items()) {
    if (!item.passed) return item.id + " degree=" + std::to_string(item.degree) + " " + item.witness;
  }
  return "";
}

struct Example {
  std::string name;
  FiniteHopf h;
  std::string character;
};

std::vector<Example> cyclic_examples() {
  return {{"k", builders::trivial(), "epsilon"},
          {"Z2", builders::cyclic_group_algebra(2), "epsilon"},
          {"Z3", builders::cyclic_group_algebra(3), "epsilon"},
          {"H4", builders::sweedler(), "delta"}};
}

Outcome criterion1() {
  Outcome o;
  for (const auto& [name, h, c] : {Example{"H4", builders::sweedler(), "delta"},
                                   Example{"Z2", builders::cyclic_group_algebra(2), "epsilon"}}) {
    auto const t = std::chrono::steady_clock::now();
    HopfCyclicModule const m(h, h.character(c));
    CheckReport const r = relation_suite(m, 4);
    double const s = seconds_since(t);
    o.require(r.passed(), name + ": " + first_failure(r));
    o.require(s < 10.0, name + " took " + std::to_string(s) + " s");
    o.detail += (o.detail.empty() ? "" : ", ") + name + " " + std::to_string(r.items().size()) + " relations";
  }
  return o;
}

Outcome criterion2() {
  Outcome o;
  FiniteHopf const h = builders::sweedler();
  InvolutionResult const inv = check_involution(h, h.counit_character());
  o.require(!inv.holds, "involution unexpectedly holds");
  o.require(inv.witness && h.label(*inv.witness) == "x", "witness is not x");
  HopfCyclicModule const m(h, h.counit_character());
  SparseMatrix const cube = multiply(m.cyclic(2), multiply(m.cyclic(2), m.cyclic(2)));
  auto const col = first_difference(cube, SparseMatrix::identity(m.dim(2)));
  o.require(col.has_value(), "tau_2^3 = I");
  CheckReport const r = relation_suite(m, 2);
  bool found = false;
  for (const auto& item : r.items()) found = found || (!item.passed && item.id == "tau_power" && item.degree == 2);
  o.require(found, "relation suite misses tau_2^3");
  if (o.passed) o.detail = "S~^2(x) = -x, tau_2^3 differs from I on " + m.basis_label(2, *col);
  return o;
}

Outcome criterion3() {
  Outcome o;
  std::size_t characters = 0;
  std::vector<std::pair<FiniteHopf, std::vector<Scalar>>> cases{
      {builders::trivial(), {0, 1, -1, 2}},
      {builders::cyclic_group_algebra(2), {0, 1, -1, 2}},
      {builders::cyclic_group_algebra(3), {0, 1, -1}},
      {builders::cyclic_group_algebra(3, FieldSpec{3}), {0, 1, Scalar::zeta(3), Scalar::zeta(3, 2)}},
      {builders::sweedler(), {0, 1, -1, 2}},
      {builders::function_algebra("kZ2", builders::cyclic_group_table(2)), {0, 1, -1}},
      {builders::function_algebra("kZ3", builders::cyclic_group_table(3)), {0, 1}}};
  std::uint64_t seed = 1;
  for (const auto& [h, pool] : cases) {
    for (const auto& name : h.character_names()) {
      CheckReport const r = check_twisted_properties(h, h.character(name));
      o.require(r.passed(), h.name() + "/" + name + ": " + first_failure(r));
      ++characters;
    }
    auto const random = random_characters(h, pool, 100, seed++);
    o.require(random.size() == 100, h.name() + ": no valid random characters");
    for (const auto& c : random) {
      CheckReport const r = check_twisted_properties(h, c);
      o.require(r.passed(), h.name() + " random: " + first_failure(r));
      ++characters;
    }
  }
  if (o.passed) o.detail = std::to_string(cases.size()) + " algebras, " + std::to_string(characters) + " characters";
  return o;
}

Outcome criterion4() {
  Outcome o;
  std::mt19937_64 rng(4);
  std::size_t checked = 0;
  for (const auto& [name, h, c] : cyclic_examples()) {
    FiniteHopfModel const model(h, h.character(c));
    std::vector<std::vector<Element>> samples;
    for (unsigned n = 1; n <= 3; ++n) {
      auto const s = random_pure_tensors(h, n, 100, rng);
      samples.insert(samples.end(), s.begin(), s.end());
    }
    CheckReport const r = symbolic::cyclic_power_suite(model, samples, [&](const Tensor<BasisIndex>& t) {
      return h.format(t);
    });
    o.require(r.passed(), name + ": " + first_failure(r));
    checked += samples.size();
  }
  if (o.passed) o.detail = std::to_string(checked) + " tensors, j <= n+1, n <= 3";
  return o;
}

Outcome criterion5() {
  Outcome o;
  std::size_t items = 0;
  for (const auto& [name, h, c] : cyclic_examples()) {
    HopfCyclicModule const m(h, h.character(c));
    CheckReport const r = mixed_complex_suite(m, 5);
    o.require(r.passed(), name + ": " + first_failure(r));
    items += r.items().size();
  }
  AlgebraCochainModule const m2(FiniteAlgebra::matrices(2));
  CheckReport const r = mixed_complex_suite(m2, 4);
  o.require(r.passed(), "M2 cochains: " + first_failure(r));
  items += r.items().size();
  if (o.passed) o.detail = std::to_string(items) + " matrix identities";
  return o;
}

Outcome criterion6() {
  Outcome o;
  auto const t = std::chrono::steady_clock::now();
  FiniteHopf const k = builders::trivial();
  HopfCyclicModule const m(k, k.counit_character());
  ComplexReport const r = compute_cohomology(m, "epsilon", {});
  double const s = seconds_since(t);
  o.require(r.hc_lambda() == std::vector<std::size_t>{1, 0, 1, 0, 1}, "HC (lambda) differs");
  o.require(r.hc_bB() == std::vector<std::size_t>{1, 0, 1, 0, 1}, "HC (bB) differs");
  o.require(r.hh() == std::vector<std::size_t>{1, 0, 0, 0, 0}, "HH differs");
  o.require(s < 1.0, "took " + std::to_string(s) + " s");
  if (o.passed) o.detail = "HC 1,0,1,0,1, HH 1,0,0,0,0";
  return o;
}

struct GoldenRow {
  std::size_t dim, rank_b, hh, lambda_dim, hc;
};

std::vector<GoldenRow> read_golden(const std::string& file) {
  std::ifstream in(std::string(HOPFCYC_GOLDEN_DIR) + "/" + file);
  std::vector<GoldenRow> rows;
  std::regex const re(R"(degree \d+: dim=(\d+) rank_b=(\d+) HH=(\d+) lambda_dim=(\d+) HC=(\d+))");
  std::string line;
  while (std::getline(in, line)) {
    std::smatch m;
    if (std::regex_match(line, m, re)) {
      rows.push_back({std::stoul(m[1]), std::stoul(m[2]), std::stoul(m[3]), std::stoul(m[4]), std::stoul(m[5])});
    }
  }
  return rows;
}

Outcome criterion7() {
  Outcome o;
  std::vector<std::tuple<std::string, FiniteHopf, std::string, std::string>> cases{
      {"Z2", builders::cyclic_group_algebra(2), "epsilon", "cohomology_z2.txt"},
      {"Z3", builders::cyclic_group_algebra(3), "epsilon", "cohomology_z3.txt"},
      {"H4", builders::sweedler(), "delta", "cohomology_h4_delta.txt"}};
  for (const auto& [name, h, c, file] : cases) {
    HopfCyclicModule const m(h, h.character(c));
    ComplexReport const r = compute_cohomology(m, c, {});
    auto const golden = read_golden(file);
    o.require(golden.size() == 5, name + ": golden file unreadable");
    o.require(r.methods_agree, name + ": methods disagree");
    for (std::size_t n = 0; n < golden.size() && n < r.rows.size(); ++n) {
      const auto& row = r.rows[n];
      const auto& g = golden[n];
      bool const same = row.dim == g.dim && row.rank_b == g.rank_b && row.hh == g.hh &&
                        row.lambda_dim == g.lambda_dim && row.hc_lambda == g.hc &&
                        (row.boundary_unreliable || row.hc_bB == g.hc);
      o.require(same, name + ": degree " + std::to_string(n) + " differs from golden");
    }
    std::string hc;
    for (auto v : r.hc_bB()) hc += std::to_string(v);
    o.detail += (o.detail.empty() ? "" : ", ") + name + " HC=" + hc;
  }
  return o;
}

Outcome criterion8() {
  Outcome o;
  LieAlgebra const g = LieAlgebra::affine_line();
  LieCharacter const delta = LieCharacter::modular(g);
  o.require(delta.generator_values() == std::vector<Scalar>{1, 0}, "adjoint trace is not (1, 0)");
  EnvelopingModel const m(Enveloping(g), delta);
  CheckReport const basics = check_enveloping(m, 4);
  o.require(basics.passed(), first_failure(basics));
  std::mt19937_64 rng(20);
  std::map<unsigned, std::vector<Tensor<Monomial>>> samples;
  for (unsigned n = 0; n <= 3; ++n) samples[n] = sample_tensors(m.algebra(), n, 3, 50, rng);
  CheckReport const rel = symbolic::relation_suite(m, samples, 3, [&](const Tensor<Monomial>& t) {
    return m.algebra().format(t);
  });
  o.require(rel.passed(), first_failure(rel));
  // b(X) = delta_0 X - delta_1 X + delta_2 X in degree 2, and b(1) = 0 in degree 1.
  Tensor<Monomial> x;
  accumulate(x, std::vector<Monomial>{Monomial{1, 0}}, Scalar(1));
  Tensor<Monomial> bx;
  for (unsigned i = 0; i <= 2; ++i) accumulate_all(bx, tensor::face(m, i, 2, x), Scalar(i % 2 == 0 ? 1 : -1));
  o.require(bx.empty(), "b(X) != 0");
  Tensor<Monomial> b1;
  auto const one = tensor::scalar_tensor<Monomial>(Scalar(1));
  accumulate_all(b1, tensor::face(m, 0, 1, one));
  accumulate_all(b1, tensor::face(m, 1, 1, one), Scalar(-1));
  o.require(b1.empty(), "b : C^0 -> C^1 is nonzero");
  if (o.passed) o.detail = std::to_string(rel.items().size()) + " relations on seeded samples, X is a nonzero 1-cocycle";
  return o;
}

Outcome criterion9() {
  Outcome o;
  CheckReport const nf = normal_form_suite(4);
  o.require(nf.passed(), first_failure(nf));
  for (unsigned n = 0; n <= 4; ++n) {
    LambdaMorphism const t = LambdaMorphism::from_generator(Generator::cyclic(n));
    LambdaMorphism power = LambdaMorphism::identity(n);
    for (unsigned k = 0; k <= n; ++k) power = compose(t, power);
    o.require(power == LambdaMorphism::identity(n), "tau_" + std::to_string(n) + "^(n+1) is not the identity");
  }
  for (const auto& [name, h, c] : {Example{"H4", builders::sweedler(), "delta"},
                                   Example{"Z2", builders::cyclic_group_algebra(2), "epsilon"}}) {
    HopfCyclicModule const m(h, h.character(c));
    CheckReport const r = functoriality_suite(m, 4, 200, 9);
    o.require(r.passed(), name + ": " + first_failure(r));
  }
  if (o.passed) o.detail = "200 words per degree on H4 and Z2";
  return o;
}

Outcome criterion10() {
  Outcome o;
  auto const table = builders::cyclic_group_table(2);
  FiniteHopf const h = builders::group_algebra("Z2", table, {}, {"1", "g"});
  FiniteAlgebra const a = FiniteAlgebra::underlying(builders::function_algebra("kZ2", table, {"1", "g"}));
  HopfAction const act = HopfAction::translation(table);
  HopfCyclicModule const hm(h, h.counit_character());
  AlgebraCochainModule const am(a);
  CheckReport const good = check_gamma_morphism(hm, am, act, summation_trace(a), 3);
  o.require(good.passed(), "summation trace: " + first_failure(good));
  CheckReport const bad = check_gamma_morphism(hm, am, act, coefficient_trace(a, 0), 3);
  bool only_cyclic = true;
  for (const auto& item : bad.items()) {
    if (!item.passed && item.id != "gamma_cyclic") only_cyclic = false;
  }
  o.require(bad.find_failure("gamma_cyclic") != nullptr, "point evaluation passes the cyclic check");
  o.require(only_cyclic, "point evaluation breaks faces or degeneracies");
  // Values against the direct expansion.
  std::ifstream in(std::string(HOPFCYC_GOLDEN_DIR) + "/gamma_translation_z2.txt");
  std::regex const re(R"(gamma\((\w+)\)\((\w+),(\w+)\) = (-?\d+))");
  SparseMatrix const g1 = characteristic_map(hm, am, act, summation_trace(a), 1);
  std::string line;
  std::size_t values = 0;
  auto index = [](const std::string& s) { return static_cast<BasisIndex>(s == "g" || s == "p_g" ? 1 : 0); };
  while (std::getline(in, line)) {
    std::smatch m;
    if (!std::regex_match(line, m, re)) continue;
    Scalar const engine = g1.at(am.encode({index(m[2]), index(m[3])}), index(m[1]));
    o.require(engine == Scalar(std::stol(m[4])), "gamma value differs: " + line);
    ++values;
  }
  o.require(values == 8, "golden gamma table unreadable");
  if (o.passed) o.detail = "commutes up to n=3; point evaluation fails only tau compatibility";
  return o;
}

Outcome criterion11() {
  Outcome o;
  auto el = [](std::initializer_list<long> c) {
    Element e;
    BasisIndex i = 0;
    for (long v : c) {
      if (v != 0) accumulate(e, i, Scalar(v));
      ++i;
    }
    return e;
  };
  auto trace_cochain = [](const AlgebraCochainModule& am, unsigned degree, const Trace& t) {
    const FiniteAlgebra& a = am.algebra();
    return make_cochain(am, degree, [&](const std::vector<BasisIndex>& x) {
      Element p = a.basis_element(x[0]);
      for (std::size_t k = 1; k < x.size(); ++k) p = a.multiply(p, a.basis_element(x[k]));
      return t(p);
    });
  };
  struct Case {
    std::string name;
    FiniteAlgebra a;
    Trace t;
    MatrixOverAlgebra e;
    std::vector<std::pair<Element, Element>> units;
  };
  FiniteAlgebra const z2 = FiniteAlgebra::underlying(builders::cyclic_group_algebra(2));
  Element half;
  accumulate(half, 0, Scalar::rational(1, 2));
  accumulate(half, 1, Scalar::rational(1, 2));
  Element inv;
  accumulate(inv, 0, Scalar::rational(2, 3));
  accumulate(inv, 1, Scalar::rational(-1, 3));
  std::vector<Case> cases{
      {"Q", FiniteAlgebra::scalars(), Trace{{1}}, MatrixOverAlgebra{2, {el({1}), el({1}), {}, {}}}, {}},
      {"Q[Z/2]", z2, Trace{{1, 0}}, MatrixOverAlgebra{2, {half, half, {}, {}}},
       {{el({0, 1}), el({0, 1})}, {el({2, 1}), inv}}}};
  for (const auto& c : cases) {
    AlgebraCochainModule const am(c.a);
    for (unsigned degree : {0u, 2u}) {
      Cochain const phi = trace_cochain(am, degree, c.t);
      CheckReport const cocycle = check_cyclic_cocycle(am, phi);
      o.require(cocycle.passed(), c.name + " degree " + std::to_string(degree) + ": " + first_failure(cocycle));
      SimilarityResult const s = similarity_invariance(am, phi, c.e, c.units, 20, 11);
      o.require(s.invariant && s.values.size() == 20, c.name + " degree " + std::to_string(degree) + " not invariant");
      o.detail += (o.detail.empty() ? "" : ", ") + c.name + " deg " + std::to_string(degree) + " = " +
                  s.base.to_string();
    }
  }
  return o;
}

}  // namespace

int main() {
  std::vector<std::pair<std::string, std::function<Outcome()>>> const criteria{
      {"relation suite for H4/delta and Q[Z/2] up to n=4", criterion1},
      {"H4 with delta=epsilon: involution and tau_2^3 negative control", criterion2},
      {"twisted antipode properties on built-in and random characters", criterion3},
      {"cyclic power formula on random tensors", criterion4},
      {"mixed complex identities up to degree 5", criterion5},
      {"trivial Hopf algebra HC and HH", criterion6},
      {"lambda and bB cohomology agree with the dense oracle", criterion7},
      {"U(ax+b) with the adjoint trace character", criterion8},
      {"cyclic category functoriality and normal forms", criterion9},
      {"characteristic map for translation on functions", criterion10},
      {"pairing invariant under 20 similarity conjugations", criterion11}};
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    auto const start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.passed = false;
      o.detail = std::string("exception: ") + e.what();
    }
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f s", seconds_since(start));
    std::cout << "criterion " << i + 1 << ": " << (o.passed ? "pass" : "FAIL") << "  " << criteria[i].first
              << " [" << o.detail << "] (" << buf << ")\n";
    if (!o.passed) ++failed;
  }
  std::cout << "acceptance: " << criteria.size() - failed << " passed, " << failed << " failed\n";
  return failed == 0 ? 0 : 1;
}
