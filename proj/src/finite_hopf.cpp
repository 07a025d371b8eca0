#include "hopfcyc/finite_hopf.hpp"

#include <numeric>
#include <random>

namespace hopfcyc {

namespace {

std::string coefficient_prefix(const Scalar& c, bool first, bool has_label) {
  std::string out;
  if (c.is_rational()) {
    bool const neg = sgn(c.rational_value()) < 0;
    mpq_class const mag = abs(c.rational_value());
    out += first ? (neg ? "-" : "") : (neg ? " - " : " + ");
    if (mag != 1 || !has_label) {
      out += mag.get_str() + (has_label ? "*" : "");
    }
    return out;
  }
  out += first ? "" : " + ";
  return out + "(" + c.to_string() + ")" + (has_label ? "*" : "");
}

template <class Terms, class LabelOf>
std::string format_terms(const Terms& terms, LabelOf&& label_of) {
  if (terms.empty()) {
    return "0";
  }
  std::string out;
  bool first = true;
  for (const auto& [key, c] : terms) {
    std::string const label = label_of(key);
    out += coefficient_prefix(c, first, !label.empty());
    out += label;
    first = false;
  }
  return out;
}

void check_field(const Scalar& s, const FieldSpec& field, const std::string& where) {
  if (!s.is_rational() && s.order() != field.order) {
    throw FieldMismatch(where + ": scalar " + s.to_string() + " is not in " + field.describe());
  }
}

// (a (x) b)(c (x) d) = ac (x) bd over basis tensors.
Tensor<BasisIndex> tensor_product_2(const FiniteHopf& h, const Tensor<BasisIndex>& x,
                                    const Tensor<BasisIndex>& y) {
  Tensor<BasisIndex> out;
  for (const auto& [tx, cx] : x) {
    for (const auto& [ty, cy] : y) {
      for (const auto& [k0, c0] : h.product(tx[0], ty[0])) {
        for (const auto& [k1, c1] : h.product(tx[1], ty[1])) {
          accumulate(out, std::vector<BasisIndex>{k0, k1}, cx * cy * c0 * c1);
        }
      }
    }
  }
  return out;
}

}  // namespace

Character::Character(const FiniteHopf& h, std::vector<Scalar> values) : values_(std::move(values)) {
  if (values_.size() != h.dim()) {
    throw InvalidCharacter("character has " + std::to_string(values_.size()) +
                           " values, algebra dimension is " + std::to_string(h.dim()));
  }
  for (const auto& v : values_) check_field(v, h.field(), "character");
  if (!((*this)(h.unit()) == Scalar(1))) {
    throw InvalidCharacter("character does not send 1 to 1");
  }
  for (BasisIndex i = 0; i < h.dim(); ++i) {
    for (BasisIndex j = 0; j < h.dim(); ++j) {
      if (!((*this)(h.product(i, j)) == values_[i] * values_[j])) {
        throw InvalidCharacter("character is not multiplicative on (" + h.label(i) + ", " +
                               h.label(j) + ")");
      }
    }
  }
}

Scalar Character::operator()(const Element& x) const {
  Scalar out;
  for (const auto& [k, c] : x) out += c * values_.at(k);
  return out;
}

FiniteHopf::FiniteHopf(Presentation p) : presentation_(p), name_(p.name), field_(p.field) {
  std::size_t const d = p.basis.size();
  if (d == 0) {
    throw std::invalid_argument("Hopf algebra must have positive dimension");
  }
  basis_ = p.basis;
  if (p.unit.size() != d || p.counit.size() != d) {
    throw DimensionMismatch("unit and counit need one entry per basis element");
  }
  auto check_index = [d](BasisIndex i, const char* what) {
    if (i >= d) {
      throw DimensionMismatch(std::string(what) + " index " + std::to_string(i) + " out of range");
    }
  };
  for (BasisIndex i = 0; i < d; ++i) {
    check_field(p.unit[i], field_, "unit");
    check_field(p.counit[i], field_, "counit");
    accumulate(unit_, i, p.unit[i]);
  }
  counit_ = p.counit;
  product_.assign(d * d, {});
  for (const auto& t : p.product) {
    check_index(t.a, "product");
    check_index(t.b, "product");
    check_index(t.c, "product");
    check_field(t.coef, field_, "product");
    accumulate(product_[t.a * d + t.b], t.c, t.coef);
  }
  coproduct_.assign(d, {});
  for (const auto& t : p.coproduct) {
    check_index(t.a, "coproduct");
    check_index(t.b, "coproduct");
    check_index(t.c, "coproduct");
    check_field(t.coef, field_, "coproduct");
    accumulate(coproduct_[t.a], std::vector<BasisIndex>{t.b, t.c}, t.coef);
  }
  antipode_.assign(d, {});
  for (const auto& t : p.antipode) {
    check_index(t.from, "antipode");
    check_index(t.to, "antipode");
    check_field(t.coef, field_, "antipode");
    accumulate(antipode_[t.from], t.to, t.coef);
  }
}

Element FiniteHopf::multiply(const Element& a, const Element& b) const {
  Element out;
  for (const auto& [i, x] : a) {
    for (const auto& [j, y] : b) accumulate_all(out, product(i, j), x * y);
  }
  return out;
}

Tensor<BasisIndex> FiniteHopf::coproduct(const Element& a) const {
  Tensor<BasisIndex> out;
  for (const auto& [i, x] : a) accumulate_all(out, coproduct(i), x);
  return out;
}

Scalar FiniteHopf::counit(const Element& a) const {
  Scalar out;
  for (const auto& [i, x] : a) out += x * counit_[i];
  return out;
}

Element FiniteHopf::antipode(const Element& a) const {
  Element out;
  for (const auto& [i, x] : a) accumulate_all(out, antipode(i), x);
  return out;
}

Character FiniteHopf::counit_character() const { return {*this, counit_}; }

std::vector<std::string> FiniteHopf::character_names() const {
  std::vector<std::string> names;
  for (const auto& [name, v] : presentation_.characters) names.push_back(name);
  if (!presentation_.characters.contains("epsilon")) {
    names.insert(std::lower_bound(names.begin(), names.end(), std::string("epsilon")), "epsilon");
  }
  return names;
}

Character FiniteHopf::character(const std::string& name) const {
  auto it = presentation_.characters.find(name);
  if (it != presentation_.characters.end()) {
    return {*this, it->second};
  }
  if (name == "epsilon") {
    return counit_character();
  }
  throw std::out_of_range("unknown character '" + name + "' for " + name_);
}

std::string FiniteHopf::format(const Element& x) const {
  return format_terms(x, [this](BasisIndex i) { return basis_[i]; });
}

std::string FiniteHopf::format_tuple(const std::vector<BasisIndex>& tuple) const {
  if (tuple.empty()) {
    return "1";
  }
  std::string out;
  for (std::size_t k = 0; k < tuple.size(); ++k) {
    if (k) out += "⊗";
    out += basis_.at(tuple[k]);
  }
  return out;
}

std::string FiniteHopf::format(const Tensor<BasisIndex>& t) const {
  return format_terms(t, [this](const std::vector<BasisIndex>& tuple) {
    return tuple.empty() ? std::string() : format_tuple(tuple);
  });
}

Element FiniteHopf::from_coefficients(const std::vector<Scalar>& v) {
  Element out;
  for (BasisIndex i = 0; i < v.size(); ++i) accumulate(out, i, v[i]);
  return out;
}

FiniteHopfModel::FiniteHopfModel(FiniteHopf h, Character delta)
    : hopf_(std::move(h)), delta_(std::move(delta)) {
  if (delta_.values().size() != hopf_.dim()) {
    throw InvalidCharacter("character does not match algebra dimension");
  }
  twisted_.reserve(hopf_.dim());
  for (BasisIndex i = 0; i < hopf_.dim(); ++i) {
    twisted_.push_back(hopfcyc::twisted_antipode(hopf_, delta_, hopf_.basis_element(i)));
  }
}

Element twisted_antipode(const FiniteHopf& h, const Character& delta, const Element& x) {
  Element out;
  for (const auto& [tuple, c] : h.coproduct(x)) {
    Scalar const d = delta(tuple[0]);
    if (!d.is_zero()) accumulate_all(out, h.antipode(tuple[1]), c * d);
  }
  return out;
}

Element twist_automorphism(const FiniteHopf& h, const Character& delta, const Element& x) {
  Element out;
  for (const auto& [tuple, c] : h.coproduct(x)) accumulate(out, tuple[1], c * delta(tuple[0]));
  return out;
}

SparseMatrix antipode_matrix(const FiniteHopf& h) {
  return basis_matrix(h.dim(), [&](BasisIndex i) { return h.antipode(i); });
}

SparseMatrix twisted_antipode_matrix(const FiniteHopf& h, const Character& delta) {
  return basis_matrix(h.dim(),
                      [&](BasisIndex i) { return twisted_antipode(h, delta, h.basis_element(i)); });
}

SparseMatrix twist_automorphism_matrix(const FiniteHopf& h, const Character& delta) {
  return basis_matrix(h.dim(),
                      [&](BasisIndex i) { return twist_automorphism(h, delta, h.basis_element(i)); });
}

CheckReport check_hopf_axioms(const FiniteHopf& h) {
  CheckReport report;
  auto const d = static_cast<BasisIndex>(h.dim());
  auto e = [&](BasisIndex i) { return h.basis_element(i); };
  auto labels = [&](std::initializer_list<BasisIndex> idx) {
    std::string out = "(";
    bool first = true;
    for (auto i : idx) {
      out += (first ? "" : ", ") + h.label(i);
      first = false;
    }
    return out + ")";
  };
  auto run = [&](const std::string& id, auto&& body) {
    CheckItem item;
    item.id = id;
    body(item);
    report.add(std::move(item));
  };
  auto fail = [](CheckItem& item, std::string witness) {
    if (item.passed) {
      item.passed = false;
      item.witness = std::move(witness);
    }
  };

  run("associativity", [&](CheckItem& item) {
    for (BasisIndex i = 0; i < d && item.passed; ++i)
      for (BasisIndex j = 0; j < d && item.passed; ++j)
        for (BasisIndex k = 0; k < d && item.passed; ++k) {
          Element const l = h.multiply(h.product(i, j), e(k));
          Element const r = h.multiply(e(i), h.product(j, k));
          if (l != r) fail(item, labels({i, j, k}) + ": " + h.format(l) + " vs " + h.format(r));
        }
  });
  run("unit", [&](CheckItem& item) {
    for (BasisIndex i = 0; i < d && item.passed; ++i) {
      Element const l = h.multiply(h.unit(), e(i));
      Element const r = h.multiply(e(i), h.unit());
      if (l != e(i) || r != e(i)) {
        fail(item, labels({i}) + ": 1*h = " + h.format(l) + ", h*1 = " + h.format(r));
      }
    }
  });
  run("coassociativity", [&](CheckItem& item) {
    for (BasisIndex i = 0; i < d && item.passed; ++i) {
      Tensor<BasisIndex> left;
      Tensor<BasisIndex> right;
      for (const auto& [t, c] : h.coproduct(i)) {
        for (const auto& [u, c2] : h.coproduct(t[0]))
          accumulate(left, std::vector<BasisIndex>{u[0], u[1], t[1]}, c * c2);
        for (const auto& [u, c2] : h.coproduct(t[1]))
          accumulate(right, std::vector<BasisIndex>{t[0], u[0], u[1]}, c * c2);
      }
      if (left != right) {
        fail(item, labels({i}) + ": " + h.format(left) + " vs " + h.format(right));
      }
    }
  });
  run("counit", [&](CheckItem& item) {
    for (BasisIndex i = 0; i < d && item.passed; ++i) {
      Element left;
      Element right;
      for (const auto& [t, c] : h.coproduct(i)) {
        accumulate(left, t[1], c * h.counit(t[0]));
        accumulate(right, t[0], c * h.counit(t[1]));
      }
      if (left != e(i) || right != e(i)) {
        fail(item, labels({i}) + ": (eps⊗id)Δ = " + h.format(left) +
                       ", (id⊗eps)Δ = " + h.format(right));
      }
    }
  });
  run("coproduct_multiplicative", [&](CheckItem& item) {
    Tensor<BasisIndex> const unit2 = tensor::pure<BasisIndex>({h.unit(), h.unit()});
    if (h.coproduct(h.unit()) != unit2) {
      fail(item, "Δ(1) = " + h.format(h.coproduct(h.unit())));
    }
    for (BasisIndex i = 0; i < d && item.passed; ++i)
      for (BasisIndex j = 0; j < d && item.passed; ++j) {
        auto const l = h.coproduct(h.product(i, j));
        auto const r = tensor_product_2(h, h.coproduct(i), h.coproduct(j));
        if (l != r) fail(item, labels({i, j}) + ": " + h.format(l) + " vs " + h.format(r));
      }
  });
  run("counit_multiplicative", [&](CheckItem& item) {
    if (!(h.counit(h.unit()) == Scalar(1))) {
      fail(item, "eps(1) = " + h.counit(h.unit()).to_string());
    }
    for (BasisIndex i = 0; i < d && item.passed; ++i)
      for (BasisIndex j = 0; j < d && item.passed; ++j) {
        Scalar const l = h.counit(h.product(i, j));
        Scalar const r = h.counit(i) * h.counit(j);
        if (!(l == r)) fail(item, labels({i, j}) + ": " + l.to_string() + " vs " + r.to_string());
      }
  });
  run("antipode", [&](CheckItem& item) {
    for (BasisIndex i = 0; i < d && item.passed; ++i) {
      Element left;
      Element right;
      for (const auto& [t, c] : h.coproduct(i)) {
        accumulate_all(left, h.multiply(h.antipode(t[0]), e(t[1])), c);
        accumulate_all(right, h.multiply(e(t[0]), h.antipode(t[1])), c);
      }
      Element expected;
      accumulate_all(expected, h.unit(), h.counit(i));
      if (left != expected || right != expected) {
        fail(item, labels({i}) + ": S*I = " + h.format(left) + ", I*S = " + h.format(right) +
                       ", expected " + h.format(expected));
      }
    }
  });
  return report;
}

CheckReport check_twisted_properties(const FiniteHopf& h, const Character& delta) {
  CheckReport report;
  auto const d = static_cast<BasisIndex>(h.dim());
  auto st = [&](const Element& x) { return twisted_antipode(h, delta, x); };
  auto e = [&](BasisIndex i) { return h.basis_element(i); };

  CheckItem anti;
  anti.id = "twisted_antihomomorphism";
  if (st(h.unit()) != h.unit()) {
    anti.passed = false;
    anti.witness = "S~(1) = " + h.format(st(h.unit()));
  }
  for (BasisIndex i = 0; i < d && anti.passed; ++i)
    for (BasisIndex j = 0; j < d && anti.passed; ++j) {
      Element const l = st(h.product(i, j));
      Element const r = h.multiply(st(e(j)), st(e(i)));
      if (l != r) {
        anti.passed = false;
        anti.witness = "(" + h.label(i) + ", " + h.label(j) + "): S~(ab) = " + h.format(l) +
                       ", S~(b)S~(a) = " + h.format(r);
      }
    }
  report.add(anti);

  CheckItem coanti;
  coanti.id = "twisted_coalgebra_antimorphism";
  for (BasisIndex i = 0; i < d && coanti.passed; ++i) {
    Tensor<BasisIndex> const l = h.coproduct(st(e(i)));
    Tensor<BasisIndex> r;
    for (const auto& [t, c] : h.coproduct(i)) {
      accumulate_all(r, tensor::pure<BasisIndex>({h.antipode(t[1]), st(e(t[0]))}), c);
    }
    if (l != r) {
      coanti.passed = false;
      coanti.witness = "(" + h.label(i) + "): ΔS~(h) = " + h.format(l) +
                       ", ΣS(h2)⊗S~(h1) = " + h.format(r);
    }
  }
  report.add(coanti);

  CheckItem counit;
  counit.id = "twisted_counit";
  for (BasisIndex i = 0; i < d && counit.passed; ++i) {
    Scalar const l = h.counit(st(e(i)));
    if (!(l == delta(i))) {
      counit.passed = false;
      counit.witness = "(" + h.label(i) + "): eps(S~(h)) = " + l.to_string() +
                       ", delta(h) = " + delta(i).to_string();
    }
  }
  report.add(counit);
  return report;
}

InvolutionResult check_involution(const FiniteHopf& h, const Character& delta) {
  SparseMatrix const m = twisted_antipode_matrix(h, delta);
  SparseMatrix const sq = multiply(m, m);
  InvolutionResult result;
  if (auto col = first_difference(sq, SparseMatrix::identity(h.dim()))) {
    auto const i = static_cast<BasisIndex>(*col);
    Element image;
    for (const auto& [k, c] : sq.column(i)) accumulate(image, static_cast<BasisIndex>(k), c);
    result.holds = false;
    result.witness = i;
    result.detail = "S~^2(" + h.label(i) + ") = " + h.format(image);
  }
  return result;
}

std::vector<Character> random_characters(const FiniteHopf& h, const std::vector<Scalar>& pool,
                                         std::size_t count, std::uint64_t seed,
                                         std::size_t max_trials) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  std::vector<Character> out;
  for (std::size_t trial = 0; trial < max_trials && out.size() < count; ++trial) {
    std::vector<Scalar> values(h.dim());
    for (auto& v : values) v = pool[pick(rng)];
    try {
      out.emplace_back(h, std::move(values));
    } catch (const InvalidCharacter&) {
    }
  }
  return out;
}

namespace builders {

std::vector<std::vector<BasisIndex>> cyclic_group_table(unsigned n) {
  std::vector<std::vector<BasisIndex>> t(n, std::vector<BasisIndex>(n));
  for (unsigned a = 0; a < n; ++a)
    for (unsigned b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  return t;
}

namespace {

std::vector<BasisIndex> inverses(const std::vector<std::vector<BasisIndex>>& table) {
  std::vector<BasisIndex> inv(table.size());
  for (BasisIndex a = 0; a < table.size(); ++a) {
    bool found = false;
    for (BasisIndex b = 0; b < table.size(); ++b) {
      if (table[a][b] == 0) {
        inv[a] = b;
        found = true;
        break;
      }
    }
    if (!found) {
      throw std::invalid_argument("Cayley table is not a group (no inverse)");
    }
  }
  return inv;
}

std::vector<std::string> default_labels(std::size_t n, std::vector<std::string> labels) {
  if (labels.empty()) {
    for (std::size_t i = 0; i < n; ++i) labels.push_back(i == 0 ? "e" : "g" + std::to_string(i));
  }
  if (labels.size() != n) {
    throw std::invalid_argument("label count does not match group order");
  }
  return labels;
}

}  // namespace

FiniteHopf group_algebra(const std::string& name, const std::vector<std::vector<BasisIndex>>& table,
                         FieldSpec field, std::vector<std::string> labels) {
  auto const n = static_cast<BasisIndex>(table.size());
  auto const inv = inverses(table);
  FiniteHopf::Presentation p;
  p.name = name;
  p.field = field;
  p.basis = default_labels(n, std::move(labels));
  p.unit.assign(n, Scalar());
  p.unit[0] = Scalar(1);
  p.counit.assign(n, Scalar(1));
  for (BasisIndex a = 0; a < n; ++a) {
    for (BasisIndex b = 0; b < n; ++b) p.product.push_back({a, b, table[a][b], Scalar(1)});
    p.coproduct.push_back({a, a, a, Scalar(1)});
    p.antipode.push_back({a, inv[a], Scalar(1)});
  }
  return FiniteHopf(std::move(p));
}

FiniteHopf cyclic_group_algebra(unsigned n, FieldSpec field) {
  std::vector<std::string> labels;
  for (unsigned a = 0; a < n; ++a) {
    labels.push_back(a == 0 ? "1" : (a == 1 ? "g" : "g^" + std::to_string(a)));
  }
  std::string name = "Q[Z/" + std::to_string(n) + "]";
  if (!field.is_rational()) {
    name = "Q(zeta_" + std::to_string(field.order) + ")[Z/" + std::to_string(n) + "]";
  }
  FiniteHopf base = group_algebra(name, cyclic_group_table(n), field, labels);
  auto p = base.presentation();
  for (unsigned k = 1; k < n; ++k) {
    unsigned const ord = n / std::gcd(n, k);
    unsigned const step = k / (n / ord);  // chi_k(g) = zeta_ord^step
    if (ord > 2 && field.order % ord != 0) {
      continue;
    }
    std::vector<Scalar> values;
    for (unsigned a = 0; a < n; ++a) {
      long const e = static_cast<long>(step * a);
      values.push_back(ord <= 2 ? Scalar(e % 2 == 0 ? 1 : -1)
                                : Scalar::zeta(field.order, e * static_cast<long>(field.order / ord)));
    }
    p.characters["chi_" + std::to_string(k)] = std::move(values);
  }
  return FiniteHopf(std::move(p));
}

FiniteHopf function_algebra(const std::string& name,
                            const std::vector<std::vector<BasisIndex>>& table,
                            std::vector<std::string> labels) {
  auto const n = static_cast<BasisIndex>(table.size());
  auto const inv = inverses(table);
  labels = default_labels(n, std::move(labels));
  FiniteHopf::Presentation p;
  p.name = name;
  for (const auto& l : labels) p.basis.push_back("p_" + l);
  p.unit.assign(n, Scalar(1));
  p.counit.assign(n, Scalar());
  p.counit[0] = Scalar(1);
  for (BasisIndex a = 0; a < n; ++a) {
    p.product.push_back({a, a, a, Scalar(1)});
    for (BasisIndex b = 0; b < n; ++b) p.coproduct.push_back({table[a][b], a, b, Scalar(1)});
    p.antipode.push_back({a, inv[a], Scalar(1)});
    std::vector<Scalar> ev(n, Scalar());
    ev[a] = Scalar(1);
    p.characters["ev_" + labels[a]] = std::move(ev);
  }
  return FiniteHopf(std::move(p));
}

FiniteHopf sweedler() {
  // Basis 1, g, x, gx with g^2 = 1, x^2 = 0, xg = -gx.
  enum : BasisIndex { one = 0, g = 1, x = 2, gx = 3 };
  FiniteHopf::Presentation p;
  p.name = "Sweedler H4";
  p.basis = {"1", "g", "x", "gx"};
  p.unit = {1, 0, 0, 0};
  for (BasisIndex b = 0; b < 4; ++b) p.product.push_back({one, b, b, 1});
  p.product.push_back({g, one, g, 1});
  p.product.push_back({g, g, one, 1});
  p.product.push_back({g, x, gx, 1});
  p.product.push_back({g, gx, x, 1});
  p.product.push_back({x, one, x, 1});
  p.product.push_back({x, g, gx, -1});
  p.product.push_back({gx, one, gx, 1});
  p.product.push_back({gx, g, x, -1});
  p.coproduct = {{one, one, one, 1},
                 {g, g, g, 1},
                 {x, x, one, 1},
                 {x, g, x, 1},
                 {gx, gx, g, 1},
                 {gx, one, gx, 1}};
  p.counit = {1, 1, 0, 0};
  p.antipode = {{one, one, 1}, {g, g, 1}, {x, gx, -1}, {gx, x, 1}};
  p.characters["delta"] = {1, -1, 0, 0};
  return FiniteHopf(std::move(p));
}

FiniteHopf trivial() {
  FiniteHopf::Presentation p;
  p.name = "k";
  p.basis = {"1"};
  p.unit = {1};
  p.product = {{0, 0, 0, 1}};
  p.coproduct = {{0, 0, 0, 1}};
  p.counit = {1};
  p.antipode = {{0, 0, 1}};
  return FiniteHopf(std::move(p));
}

}  // namespace builders

}  // namespace hopfcyc
