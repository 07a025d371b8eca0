#include "hopfcyc/actions.hpp"

#include "hopfcyc/cohomology.hpp"

namespace hopfcyc {

namespace {

std::string tuple_label(const FiniteAlgebra& a, std::initializer_list<BasisIndex> idx) {
  std::string out = "(";
  bool first = true;
  for (auto i : idx) {
    out += (first ? "" : ", ") + a.label(i);
    first = false;
  }
  return out + ")";
}

CheckItem make_item(const std::string& id, int degree = -1, std::string instance = {}) {
  CheckItem item;
  item.id = id;
  item.degree = degree;
  item.instance = std::move(instance);
  return item;
}

void fail(CheckItem& item, const std::string& witness) {
  if (item.passed) {
    item.passed = false;
    item.witness = witness;
  }
}

}  // namespace

Element HopfAction::apply(BasisIndex h, const Element& a) const {
  Element out;
  const SparseMatrix& m = matrices.at(h);
  for (const auto& [j, c] : a)
    for (const auto& [k, v] : m.column(j)) accumulate(out, static_cast<BasisIndex>(k), c * v);
  return out;
}

Element HopfAction::apply(const Element& h, const Element& a) const {
  Element out;
  for (const auto& [b, c] : h) accumulate_all(out, apply(b, a), c);
  return out;
}

HopfAction HopfAction::trivial(const FiniteHopf& h, const FiniteAlgebra& a) {
  HopfAction act;
  for (BasisIndex b = 0; b < h.dim(); ++b) {
    act.matrices.push_back(SparseMatrix::identity(a.dim()).scaled(h.counit(b)));
  }
  return act;
}

HopfAction HopfAction::translation(const std::vector<std::vector<BasisIndex>>& table) {
  std::size_t const n = table.size();
  HopfAction act;
  for (BasisIndex g = 0; g < n; ++g) {
    BasisIndex inv = 0;
    for (BasisIndex k = 0; k < n; ++k) {
      if (table[g][k] == 0) inv = k;
    }
    std::vector<SparseMatrix::Triplet> t;
    for (BasisIndex s = 0; s < n; ++s) t.push_back({table[s][inv], s, Scalar(1)});
    act.matrices.push_back(SparseMatrix::from_triplets(n, n, std::move(t)));
  }
  return act;
}

CheckReport check_action(const FiniteHopf& h, const FiniteAlgebra& a, const HopfAction& act) {
  CheckReport report;
  auto const dh = static_cast<BasisIndex>(h.dim());
  auto const da = static_cast<BasisIndex>(a.dim());
  CheckItem shape = make_item("action_shape");
  if (act.matrices.size() != dh) {
    fail(shape, std::to_string(act.matrices.size()) + " matrices for " + std::to_string(dh) +
                    " basis elements");
  }
  for (const auto& m : act.matrices) {
    if (m.rows() != da || m.cols() != da) fail(shape, "matrix is not " + std::to_string(da) + "x" +
                                                          std::to_string(da));
  }
  report.add(shape);
  if (!shape.passed) {
    return report;
  }

  CheckItem unit = make_item("unit_acts_as_identity");
  for (BasisIndex j = 0; j < da; ++j) {
    Element const img = act.apply(h.unit(), a.basis_element(j));
    if (img != a.basis_element(j)) fail(unit, "1(" + a.label(j) + ") = " + a.format(img));
  }
  report.add(unit);

  CheckItem module = make_item("module_axiom");
  for (BasisIndex x = 0; x < dh && module.passed; ++x)
    for (BasisIndex y = 0; y < dh && module.passed; ++y)
      for (BasisIndex j = 0; j < da && module.passed; ++j) {
        Element const l = act.apply(x, act.apply(y, a.basis_element(j)));
        Element const r = act.apply(h.product(x, y), a.basis_element(j));
        if (l != r) {
          fail(module, "(" + h.label(x) + ", " + h.label(y) + ", " + a.label(j) + "): " +
                           a.format(l) + " vs " + a.format(r));
        }
      }
  report.add(module);

  CheckItem leibniz = make_item("hopf_linearity");
  for (BasisIndex x = 0; x < dh && leibniz.passed; ++x)
    for (BasisIndex i = 0; i < da && leibniz.passed; ++i)
      for (BasisIndex j = 0; j < da && leibniz.passed; ++j) {
        Element const l = act.apply(x, a.product(i, j));
        Element r;
        for (const auto& [pair, c] : h.coproduct(x)) {
          accumulate_all(r, a.multiply(act.apply(pair[0], a.basis_element(i)),
                                       act.apply(pair[1], a.basis_element(j))),
                         c);
        }
        if (l != r) {
          fail(leibniz, "(" + h.label(x) + ", " + a.label(i) + ", " + a.label(j) + "): " +
                            a.format(l) + " vs " + a.format(r));
        }
      }
  report.add(leibniz);

  CheckItem unital = make_item("unit_preserved");
  for (BasisIndex x = 0; x < dh; ++x) {
    Element const l = act.apply(x, a.unit());
    Element r;
    accumulate_all(r, a.unit(), h.counit(x));
    if (l != r) fail(unital, h.label(x) + "(1) = " + a.format(l));
  }
  report.add(unital);
  return report;
}

Scalar Trace::operator()(const Element& x) const {
  Scalar out;
  for (const auto& [k, c] : x) out += c * values.at(k);
  return out;
}

CheckReport check_trace(const FiniteAlgebra& a, const Trace& t) {
  CheckReport report;
  CheckItem item = make_item("trace");
  if (t.values.size() != a.dim()) {
    fail(item, "functional has " + std::to_string(t.values.size()) + " values");
    report.add(item);
    return report;
  }
  for (BasisIndex i = 0; i < a.dim(); ++i)
    for (BasisIndex j = 0; j < a.dim(); ++j) {
      Scalar const l = t(a.product(i, j));
      Scalar const r = t(a.product(j, i));
      if (!(l == r)) fail(item, tuple_label(a, {i, j}) + ": " + l.to_string() + " vs " + r.to_string());
    }
  report.add(item);
  return report;
}

CheckReport check_delta_invariance(const FiniteHopf& h, const Character& delta,
                                   const FiniteAlgebra& a, const HopfAction& act, const Trace& t) {
  CheckReport report;
  CheckItem item = make_item("delta_invariance");
  for (BasisIndex x = 0; x < h.dim(); ++x) {
    Element const st = twisted_antipode(h, delta, h.basis_element(x));
    for (BasisIndex i = 0; i < a.dim(); ++i)
      for (BasisIndex j = 0; j < a.dim(); ++j) {
        Scalar const l = t(a.multiply(act.apply(x, a.basis_element(i)), a.basis_element(j)));
        Scalar const r = t(a.multiply(a.basis_element(i), act.apply(st, a.basis_element(j))));
        if (!(l == r)) {
          fail(item, "(" + h.label(x) + ", " + a.label(i) + ", " + a.label(j) +
                         "): tau(h(a)b) = " + l.to_string() + ", tau(a S~(h)(b)) = " +
                         r.to_string());
        }
      }
  }
  report.add(item);
  return report;
}

Trace summation_trace(const FiniteAlgebra& a) { return {std::vector<Scalar>(a.dim(), Scalar(1))}; }

Trace coefficient_trace(const FiniteAlgebra& a, BasisIndex index) {
  std::vector<Scalar> v(a.dim());
  v.at(index) = Scalar(1);
  return {v};
}

Trace matrix_trace(unsigned q) {
  std::vector<Scalar> v(q * q);
  for (unsigned i = 0; i < q; ++i) v[i * q + i] = Scalar(1);
  return {v};
}

SparseVector characteristic_cochain(const HopfCyclicModule& hm, const AlgebraCochainModule& am,
                                    const HopfAction& act, const Trace& t, unsigned n,
                                    const SparseVector& tensor) {
  const FiniteAlgebra& a = am.algebra();
  std::vector<SparseVector::Entry> e;
  for (std::size_t r = 0; r < am.dim(n); ++r) {
    auto const x = am.decode(n, r);
    Scalar value;
    for (const auto& [col, c] : tensor) {
      auto const hs = hm.decode(n, col);
      Element prod = a.basis_element(x[0]);
      for (unsigned s = 0; s < n && !prod.empty(); ++s) {
        prod = a.multiply(prod, act.apply(hs[s], a.basis_element(x[s + 1])));
      }
      value += c * t(prod);
    }
    if (!value.is_zero()) e.emplace_back(r, value);
  }
  return SparseVector::from_entries(std::move(e));
}

SparseMatrix characteristic_map(const HopfCyclicModule& hm, const AlgebraCochainModule& am,
                                const HopfAction& act, const Trace& t, unsigned n) {
  std::size_t const cols = hm.dim(n);
  std::vector<SparseVector> columns(cols);
  auto const ncols = static_cast<long>(cols);
#pragma omp parallel for schedule(dynamic, 4)
  for (long c = 0; c < ncols; ++c) {
    auto const col = static_cast<std::size_t>(c);
    columns[col] = characteristic_cochain(hm, am, act, t, n, SparseVector::unit(col));
  }
  return {am.dim(n), std::move(columns)};
}

CheckReport check_gamma_morphism(const HopfCyclicModule& hm, const AlgebraCochainModule& am,
                                 const HopfAction& act, const Trace& t, unsigned max_degree) {
  std::vector<SparseMatrix> gamma;
  for (unsigned n = 0; n <= max_degree; ++n) gamma.push_back(characteristic_map(hm, am, act, t, n));
  CheckReport report;
  auto compare = [&](const Generator& g) {
    CheckItem item = make_item(g.kind == Generator::Kind::Face
                                   ? "gamma_face"
                                   : (g.kind == Generator::Kind::Degeneracy ? "gamma_degeneracy"
                                                                            : "gamma_cyclic"),
                               static_cast<int>(g.degree),
                               g.kind == Generator::Kind::Cyclic ? std::string()
                                                                 : "i=" + std::to_string(g.index));
    SparseMatrix const lhs = multiply(gamma[g.target()], generator_matrix(hm, g));
    SparseMatrix const rhs = multiply(generator_matrix(am, g), gamma[g.source()]);
    if (auto col = first_difference(lhs, rhs)) {
      fail(item, "on " + hm.basis_label(g.source(), *col) + ": gamma(op t) = " +
                     am.format(g.target(), lhs.column(*col)) + ", op(gamma t) = " +
                     am.format(g.target(), rhs.column(*col)));
    }
    report.add(std::move(item));
  };
  for (unsigned n = 0; n <= max_degree; ++n) {
    for (unsigned i = 0; n >= 1 && i <= n; ++i) compare(Generator::face(i, n));
    for (unsigned i = 0; n + 1 <= max_degree && i <= n; ++i) compare(Generator::degeneracy(i, n));
    compare(Generator::cyclic(n));
  }
  return report;
}

Scalar evaluate(const AlgebraCochainModule& am, const Cochain& phi,
                const std::vector<Element>& args) {
  if (args.size() != phi.degree + 1) {
    throw std::invalid_argument("cochain of degree " + std::to_string(phi.degree) + " takes " +
                                std::to_string(phi.degree + 1) + " arguments");
  }
  Scalar out;
  for (const auto& [k, v] : phi.values) {
    auto const x = am.decode(phi.degree, k);
    Scalar term = v;
    for (std::size_t s = 0; s < x.size() && !term.is_zero(); ++s) {
      auto it = args[s].find(x[s]);
      term = it == args[s].end() ? Scalar() : term * it->second;
    }
    out += term;
  }
  return out;
}

CheckReport check_cyclic_cocycle(const AlgebraCochainModule& am, const Cochain& phi) {
  CheckReport report;
  const FiniteAlgebra& a = am.algebra();
  unsigned const n = phi.degree;
  CheckItem cyclic = make_item("cyclicity", static_cast<int>(n));
  CheckItem closed = make_item("hochschild_closed", static_cast<int>(n));
  if (n == 2) {
    auto const d = static_cast<BasisIndex>(a.dim());
    auto value = [&](BasisIndex x, BasisIndex y, BasisIndex z) {
      return phi.values.at(am.encode({x, y, z}));
    };
    auto value_el = [&](const Element& x, BasisIndex y, BasisIndex z, int slot) {
      Scalar out;
      for (const auto& [k, c] : x) {
        if (slot == 0) out += c * value(k, y, z);
        if (slot == 1) out += c * value(y, k, z);
        if (slot == 2) out += c * value(y, z, k);
      }
      return out;
    };
    for (BasisIndex x = 0; x < d; ++x)
      for (BasisIndex y = 0; y < d; ++y)
        for (BasisIndex z = 0; z < d; ++z) {
          if (!(value(y, z, x) == value(x, y, z))) {
            fail(cyclic, tuple_label(a, {x, y, z}) + ": phi(a1,a2,a0) = " +
                             value(y, z, x).to_string() + ", phi(a0,a1,a2) = " +
                             value(x, y, z).to_string());
          }
          for (BasisIndex w = 0; w < d && closed.passed; ++w) {
            // phi(a0a1,a2,a3) - phi(a0,a1a2,a3) + phi(a0,a1,a2a3) - phi(a3a0,a1,a2)
            Scalar const s = value_el(a.product(x, y), z, w, 0) -
                             value_el(a.product(y, z), x, w, 1) +
                             value_el(a.product(z, w), x, y, 2) -
                             value_el(a.product(w, x), y, z, 0);
            if (!s.is_zero()) {
              fail(closed, tuple_label(a, {x, y, z, w}) + ": four-term sum = " + s.to_string());
            }
          }
        }
  } else {
    SparseVector const lam = cyclic_sign(am, n).apply(phi.values);
    if (!(lam == phi.values)) {
      SparseVector diff = lam;
      diff.axpy(Scalar(-1), phi.values);
      fail(cyclic, "lambda phi - phi = " + am.format(n, diff));
    }
    SparseVector const b = hochschild_b(am, n + 1).apply(phi.values);
    if (!b.empty()) fail(closed, "b phi = " + am.format(n + 1, b));
  }
  report.add(cyclic);
  report.add(closed);
  return report;
}

MatrixOverAlgebra matrix_multiply(const FiniteAlgebra& a, const MatrixOverAlgebra& x,
                                  const MatrixOverAlgebra& y) {
  if (x.q != y.q) {
    throw DimensionMismatch("matrix sizes differ");
  }
  MatrixOverAlgebra out{x.q, std::vector<Element>(x.q * x.q)};
  for (unsigned i = 0; i < x.q; ++i)
    for (unsigned j = 0; j < x.q; ++j)
      for (unsigned k = 0; k < x.q; ++k) accumulate_all(out.at(i, j), a.multiply(x.at(i, k), y.at(k, j)));
  return out;
}

Scalar pair_idempotent(const AlgebraCochainModule& am, const Cochain& phi,
                       const MatrixOverAlgebra& e) {
  const FiniteAlgebra& a = am.algebra();
  if (e.entries.size() != e.q * e.q) {
    throw DimensionMismatch("idempotent needs q*q entries");
  }
  if (matrix_multiply(a, e, e).entries != e.entries) {
    throw NotIdempotent("E^2 != E");
  }
  Scalar out;
  if (phi.degree == 0) {
    for (unsigned i = 0; i < e.q; ++i) out += evaluate(am, phi, {e.at(i, i)});
  } else if (phi.degree == 2) {
    for (unsigned i = 0; i < e.q; ++i)
      for (unsigned j = 0; j < e.q; ++j)
        for (unsigned k = 0; k < e.q; ++k) out += evaluate(am, phi, {e.at(i, j), e.at(j, k), e.at(k, i)});
  } else {
    throw std::invalid_argument("pairing is implemented for cochains of degree 0 and 2");
  }
  return out;
}

std::pair<MatrixOverAlgebra, MatrixOverAlgebra> random_invertible(
    const FiniteAlgebra& a, unsigned q, const std::vector<std::pair<Element, Element>>& units,
    std::mt19937_64& rng, unsigned steps) {
  auto identity = [&] {
    MatrixOverAlgebra m{q, std::vector<Element>(q * q)};
    for (unsigned i = 0; i < q; ++i) m.at(i, i) = a.unit();
    return m;
  };
  std::vector<std::pair<long, long>> const ratios{{1, 1}, {-1, 1}, {2, 1}, {-1, 2}, {3, 1}, {2, 3}};
  std::uniform_int_distribution<long> coef(-2, 2);
  std::uniform_int_distribution<std::size_t> pick_ratio(0, ratios.size() - 1);
  std::uniform_int_distribution<std::size_t> pick_unit(0, units.empty() ? 0 : units.size() - 1);
  std::uniform_int_distribution<unsigned> pick_index(0, q - 1);
  std::uniform_int_distribution<int> coin(0, 2);

  MatrixOverAlgebra u = identity();
  MatrixOverAlgebra u_inv = identity();
  for (unsigned step = 0; step < steps; ++step) {
    MatrixOverAlgebra f = identity();
    MatrixOverAlgebra f_inv = identity();
    if (q >= 2 && coin(rng) != 0) {
      unsigned const i = pick_index(rng);
      unsigned j = pick_index(rng);
      while (j == i) j = pick_index(rng);
      Element x;
      for (BasisIndex b = 0; b < a.dim(); ++b) accumulate(x, b, Scalar(coef(rng)));
      f.at(i, j) = x;
      for (auto& [k, c] : x) c = -c;
      f_inv.at(i, j) = x;
    } else {
      for (unsigned i = 0; i < q; ++i) {
        auto const [num, den] = ratios[pick_ratio(rng)];
        Scalar const r = Scalar::rational(num, den);
        Element unit = a.unit();
        Element unit_inv = a.unit();
        if (!units.empty()) {
          std::tie(unit, unit_inv) = units[pick_unit(rng)];
        }
        Element d;
        accumulate_all(d, unit, r);
        Element d_inv;
        accumulate_all(d_inv, unit_inv, r.inverse());
        f.at(i, i) = d;
        f_inv.at(i, i) = d_inv;
      }
    }
    u = matrix_multiply(a, u, f);
    u_inv = matrix_multiply(a, f_inv, u_inv);
  }
  return {u, u_inv};
}

SimilarityResult similarity_invariance(const AlgebraCochainModule& am, const Cochain& phi,
                                       const MatrixOverAlgebra& e,
                                       const std::vector<std::pair<Element, Element>>& units,
                                       std::size_t count, std::uint64_t seed) {
  const FiniteAlgebra& a = am.algebra();
  std::mt19937_64 rng(seed);
  SimilarityResult result;
  result.base = pair_idempotent(am, phi, e);
  for (std::size_t k = 0; k < count; ++k) {
    auto const [u, u_inv] = random_invertible(a, e.q, units, rng);
    MatrixOverAlgebra const conj = matrix_multiply(a, matrix_multiply(a, u, e), u_inv);
    Scalar const v = pair_idempotent(am, phi, conj);
    result.values.push_back(v);
    if (!(v == result.base)) result.invariant = false;
  }
  return result;
}

}  // namespace hopfcyc
