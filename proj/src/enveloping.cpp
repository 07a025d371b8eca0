#include "hopfcyc/enveloping.hpp"

#include <algorithm>
#include <numeric>

namespace hopfcyc {

namespace {

using Gen = std::uint32_t;

LinComb<Gen> bracket_linear(const LieAlgebra& g, const LinComb<Gen>& a, const LinComb<Gen>& b) {
  LinComb<Gen> out;
  for (const auto& [i, x] : a)
    for (const auto& [j, y] : b) accumulate_all(out, g.bracket(i, j), x * y);
  return out;
}

mpz_class binomial(unsigned n, unsigned k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

void enumerate_tuples(const std::vector<Monomial>& monos, unsigned n, unsigned budget,
                      std::vector<Monomial>& current, std::vector<Tensor<Monomial>>& out) {
  if (current.size() == n) {
    out.push_back({{current, Scalar(1)}});
    return;
  }
  for (const auto& m : monos) {
    unsigned const d = total_degree(m);
    if (d > budget) continue;
    current.push_back(m);
    enumerate_tuples(monos, n, budget - d, current, out);
    current.pop_back();
  }
}

}  // namespace

std::uint32_t total_degree(const Monomial& m) {
  return std::accumulate(m.begin(), m.end(), std::uint32_t{0});
}

LieAlgebra::LieAlgebra(std::size_t dim, const std::vector<BracketTerm>& brackets,
                       std::vector<std::string> labels)
    : labels_(std::move(labels)) {
  if (labels_.empty()) {
    for (std::size_t i = 0; i < dim; ++i) labels_.push_back("X" + std::to_string(i + 1));
  }
  if (labels_.size() != dim) {
    throw InvalidLieAlgebra("label count does not match dimension");
  }
  brackets_.assign(dim * dim, {});
  std::vector<LinComb<Gen>> given(dim * dim);
  std::vector<bool> seen(dim * dim, false);
  for (const auto& t : brackets) {
    if (t.i >= dim || t.j >= dim || t.k >= dim) {
      throw InvalidLieAlgebra("bracket index out of range");
    }
    accumulate(given[t.i * dim + t.j], t.k, t.coef);
    seen[t.i * dim + t.j] = true;
  }
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) {
      auto const ij = i * dim + j;
      auto const ji = j * dim + i;
      if (i == j) {
        if (!given[ij].empty()) {
          throw InvalidLieAlgebra("[X" + std::to_string(i + 1) + ", X" + std::to_string(i + 1) +
                                  "] must vanish");
        }
        continue;
      }
      if (seen[ij] && seen[ji]) {
        LinComb<Gen> sum = given[ij];
        accumulate_all(sum, given[ji]);
        if (!sum.empty()) {
          throw InvalidLieAlgebra("brackets are not antisymmetric for (" + labels_[i] + ", " +
                                  labels_[j] + ")");
        }
        brackets_[ij] = given[ij];
      } else if (seen[ij]) {
        brackets_[ij] = given[ij];
      } else if (seen[ji]) {
        accumulate_all(brackets_[ij], given[ji], Scalar(-1));
      }
    }
  }
  for (Gen i = 0; i < dim; ++i)
    for (Gen j = 0; j < dim; ++j)
      for (Gen k = 0; k < dim; ++k) {
        LinComb<Gen> sum = bracket_linear(*this, {{i, 1}}, bracket(j, k));
        accumulate_all(sum, bracket_linear(*this, {{j, 1}}, bracket(k, i)));
        accumulate_all(sum, bracket_linear(*this, {{k, 1}}, bracket(i, j)));
        if (!sum.empty()) {
          throw InvalidLieAlgebra("Jacobi identity fails for (" + labels_[i] + ", " + labels_[j] +
                                  ", " + labels_[k] + ")");
        }
      }
}

std::vector<Scalar> LieAlgebra::adjoint_trace() const {
  std::vector<Scalar> out(dim());
  for (Gen i = 0; i < dim(); ++i) {
    for (Gen j = 0; j < dim(); ++j) {
      auto it = bracket(i, j).find(j);
      if (it != bracket(i, j).end()) out[i] += it->second;
    }
  }
  return out;
}

bool LieAlgebra::is_character(const std::vector<Scalar>& values) const {
  if (values.size() != dim()) {
    return false;
  }
  for (Gen i = 0; i < dim(); ++i)
    for (Gen j = 0; j < dim(); ++j) {
      Scalar s;
      for (const auto& [k, c] : bracket(i, j)) s += c * values[k];
      if (!s.is_zero()) return false;
    }
  return true;
}

LieAlgebra LieAlgebra::abelian(std::size_t dim) { return {dim, {}}; }

LieAlgebra LieAlgebra::affine_line() { return {2, {{0, 1, 1, Scalar(1)}}, {"X", "Y"}}; }

Enveloping::Enveloping(LieAlgebra g)
    : lie_(std::make_shared<const LieAlgebra>(std::move(g))), cache_(std::make_shared<Cache>()) {}

UElement Enveloping::generator(std::uint32_t i) const {
  Monomial m = one_monomial();
  m.at(i) = 1;
  return monomial(m);
}

UElement Enveloping::right_multiply(const Monomial& m, std::uint32_t i) const {
  auto const key = std::make_pair(m, i);
  {
    std::lock_guard<std::mutex> lock(cache_->mutex);
    auto it = cache_->right.find(key);
    if (it != cache_->right.end()) return it->second;
  }
  // Last generator present in m.
  std::uint32_t j = 0;
  bool any = false;
  for (std::uint32_t k = 0; k < m.size(); ++k) {
    if (m[k] > 0) {
      j = k;
      any = true;
    }
  }
  UElement out;
  if (!any || j <= i) {
    Monomial r = m;
    ++r[i];
    out.emplace(std::move(r), Scalar(1));
  } else {
    // m = m' X_j, and X_j X_i = X_i X_j + [X_j, X_i].
    Monomial prefix = m;
    --prefix[j];
    for (const auto& [mono, c] : right_multiply(prefix, i)) {
      accumulate_all(out, right_multiply(mono, j), c);
    }
    for (const auto& [k, c] : lie_->bracket(j, i)) {
      accumulate_all(out, right_multiply(prefix, k), c);
    }
  }
  std::lock_guard<std::mutex> lock(cache_->mutex);
  cache_->right.emplace(key, out);
  return out;
}

UElement Enveloping::product(const Monomial& a, const Monomial& b) const {
  UElement current = monomial(a);
  for (std::uint32_t i = 0; i < b.size(); ++i) {
    for (std::uint32_t r = 0; r < b[i]; ++r) {
      UElement next;
      for (const auto& [m, c] : current) accumulate_all(next, right_multiply(m, i), c);
      current = std::move(next);
    }
  }
  return current;
}

UElement Enveloping::multiply(const UElement& a, const UElement& b) const {
  UElement out;
  for (const auto& [ma, ca] : a)
    for (const auto& [mb, cb] : b) accumulate_all(out, product(ma, mb), ca * cb);
  return out;
}

Tensor<Monomial> Enveloping::coproduct(const Monomial& a) const {
  Tensor<Monomial> out;
  Monomial k(a.size(), 0);
  while (true) {
    mpz_class coef = 1;
    Monomial rest(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      coef *= binomial(a[i], k[i]);
      rest[i] = a[i] - k[i];
    }
    accumulate(out, std::vector<Monomial>{k, rest}, Scalar(mpq_class(coef)));
    std::size_t pos = 0;
    while (pos < a.size() && k[pos] == a[pos]) {
      k[pos] = 0;
      ++pos;
    }
    if (pos == a.size()) break;
    ++k[pos];
  }
  return out;
}

Tensor<Monomial> Enveloping::coproduct(const UElement& a) const {
  Tensor<Monomial> out;
  for (const auto& [m, c] : a) accumulate_all(out, coproduct(m), c);
  return out;
}

Scalar Enveloping::counit(const Monomial& a) const {
  return total_degree(a) == 0 ? Scalar(1) : Scalar(0);
}

UElement Enveloping::antipode(const Monomial& a) const {
  UElement current = one();
  for (std::uint32_t i = static_cast<std::uint32_t>(a.size()); i-- > 0;) {
    for (std::uint32_t r = 0; r < a[i]; ++r) {
      UElement next;
      for (const auto& [m, c] : current) accumulate_all(next, right_multiply(m, i), c);
      current = std::move(next);
    }
  }
  if (total_degree(a) % 2 == 1) {
    for (auto& [m, c] : current) c = -c;
  }
  return current;
}

UElement Enveloping::antipode(const UElement& a) const {
  UElement out;
  for (const auto& [m, c] : a) accumulate_all(out, antipode(m), c);
  return out;
}

std::string Enveloping::format(const Monomial& m) const {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    out += lie_->labels()[i];
    if (m[i] > 1) out += "^" + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

namespace {

template <class Terms, class LabelOf>
std::string format_sum(const Terms& terms, LabelOf&& label_of) {
  if (terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [key, c] : terms) {
    std::string const coef = c.to_string();
    bool const neg = c.is_rational() && sgn(c.rational_value()) < 0;
    std::string mag = neg ? coef.substr(1) : coef;
    if (!c.is_rational()) mag = "(" + mag + ")";
    out += first ? (neg ? "-" : "") : (neg ? " - " : " + ");
    if (mag != "1") out += mag + "*";
    out += label_of(key);
    first = false;
  }
  return out;
}

}  // namespace

std::string Enveloping::format(const UElement& x) const {
  return format_sum(x, [this](const Monomial& m) { return format(m); });
}

std::string Enveloping::format(const Tensor<Monomial>& t) const {
  return format_sum(t, [this](const std::vector<Monomial>& tuple) {
    std::string s;
    for (std::size_t k = 0; k < tuple.size(); ++k) s += (k ? "⊗" : "") + format(tuple[k]);
    return tuple.empty() ? std::string("1") : s;
  });
}

std::vector<Monomial> Enveloping::monomials_up_to(unsigned max_degree) const {
  std::vector<Monomial> out;
  for (unsigned d = 0; d <= max_degree; ++d) {
    std::vector<Monomial> level;
    Monomial m(rank(), 0);
    // Enumerate exponent vectors of total degree d.
    auto rec = [&](auto&& self, std::size_t pos, unsigned left) -> void {
      if (pos + 1 == rank()) {
        m[pos] = left;
        level.push_back(m);
        return;
      }
      for (unsigned e = left + 1; e-- > 0;) {
        m[pos] = e;
        self(self, pos + 1, left - e);
      }
    };
    if (rank() == 0) {
      if (d == 0) out.push_back(m);
      continue;
    }
    rec(rec, 0, d);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

LieCharacter::LieCharacter(const LieAlgebra& g, std::vector<Scalar> generator_values)
    : values_(std::move(generator_values)) {
  if (!g.is_character(values_)) {
    throw std::invalid_argument("functional does not vanish on the derived algebra");
  }
}

LieCharacter LieCharacter::modular(const LieAlgebra& g) { return {g, g.adjoint_trace()}; }

LieCharacter LieCharacter::trivial(const LieAlgebra& g) {
  return {g, std::vector<Scalar>(g.dim())};
}

Scalar LieCharacter::operator()(const Monomial& m) const {
  Scalar out(1);
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::uint32_t r = 0; r < m[i]; ++r) out *= values_[i];
  return out;
}

Scalar LieCharacter::operator()(const UElement& x) const {
  Scalar out;
  for (const auto& [m, c] : x) out += c * (*this)(m);
  return out;
}

EnvelopingModel::EnvelopingModel(Enveloping u, LieCharacter delta)
    : u_(std::move(u)), delta_(std::move(delta)) {
  if (delta_.generator_values().size() != u_.rank()) {
    throw std::invalid_argument("character does not match the Lie algebra");
  }
}

UElement EnvelopingModel::twisted_antipode(const Key& a) const {
  UElement out;
  for (const auto& [pair, c] : u_.coproduct(a)) {
    Scalar const d = delta_(pair[0]);
    if (!d.is_zero()) accumulate_all(out, u_.antipode(pair[1]), c * d);
  }
  return out;
}

UElement twisted_antipode(const EnvelopingModel& m, const UElement& x) {
  return tensor::map_linear(x, [&](const Monomial& k) { return m.twisted_antipode(k); });
}

CheckReport check_enveloping(const EnvelopingModel& model, unsigned max_degree) {
  const Enveloping& u = model.algebra();
  auto const monos = u.monomials_up_to(max_degree);
  CheckReport report;
  auto make = [](const char* id) {
    CheckItem item;
    item.id = id;
    return item;
  };

  CheckItem coassoc = make("coassociativity");
  CheckItem counit = make("counit");
  CheckItem antipode = make("antipode");
  CheckItem involution = make("twisted_involution");
  for (const auto& m : monos) {
    auto const d = u.coproduct(m);
    Tensor<Monomial> left;
    Tensor<Monomial> right;
    UElement eps_left;
    UElement eps_right;
    UElement conv;
    for (const auto& [pair, c] : d) {
      for (const auto& [q, c2] : u.coproduct(pair[0]))
        accumulate(left, std::vector<Monomial>{q[0], q[1], pair[1]}, c * c2);
      for (const auto& [q, c2] : u.coproduct(pair[1]))
        accumulate(right, std::vector<Monomial>{pair[0], q[0], q[1]}, c * c2);
      accumulate(eps_left, pair[1], c * u.counit(pair[0]));
      accumulate(eps_right, pair[0], c * u.counit(pair[1]));
      accumulate_all(conv, u.multiply(u.antipode(pair[0]), u.monomial(pair[1])), c);
    }
    if (coassoc.passed && left != right) {
      coassoc.passed = false;
      coassoc.witness = u.format(m);
    }
    if (counit.passed && (eps_left != u.monomial(m) || eps_right != u.monomial(m))) {
      counit.passed = false;
      counit.witness = u.format(m);
    }
    UElement expected;
    accumulate_all(expected, u.one(), u.counit(m));
    if (antipode.passed && conv != expected) {
      antipode.passed = false;
      antipode.witness = u.format(m) + ": S*I = " + u.format(conv);
    }
    UElement const twice = twisted_antipode(model, model.twisted_antipode(m));
    if (involution.passed && twice != u.monomial(m)) {
      involution.passed = false;
      involution.witness = "S~^2(" + u.format(m) + ") = " + u.format(twice);
    }
  }
  CheckItem generators = make("twisted_antipode_generators");
  for (std::uint32_t i = 0; i < u.rank() && generators.passed; ++i) {
    UElement expected = u.generator(i);
    for (auto& [k, c] : expected) c = -c;
    accumulate_all(expected, u.one(), model.character().generator_values()[i]);
    Monomial x = u.one_monomial();
    x[i] = 1;
    if (model.twisted_antipode(x) != expected) {
      generators.passed = false;
      generators.witness = "S~(" + u.format(x) + ") = " + u.format(model.twisted_antipode(x));
    }
  }
  for (auto* item : {&coassoc, &counit, &antipode, &generators, &involution}) {
    if (item != &generators) item->instance = "degree<=" + std::to_string(max_degree);
    report.add(*item);
  }
  return report;
}

std::vector<Tensor<Monomial>> sample_tensors(const Enveloping& u, unsigned n,
                                             unsigned max_total_degree, std::size_t random_count,
                                             std::mt19937_64& rng) {
  auto const monos = u.monomials_up_to(max_total_degree);
  std::vector<Tensor<Monomial>> out;
  std::vector<Monomial> current;
  enumerate_tuples(monos, n, max_total_degree, current, out);
  std::size_t const base = out.size();
  std::uniform_int_distribution<std::size_t> pick(0, base - 1);
  std::uniform_int_distribution<int> terms(2, 4);
  std::uniform_int_distribution<long> coef(-3, 3);
  for (std::size_t r = 0; r < random_count; ++r) {
    Tensor<Monomial> t;
    int const count = terms(rng);
    for (int k = 0; k < count; ++k) {
      long c = coef(rng);
      if (c == 0) c = 1;
      accumulate_all(t, out[pick(rng)], Scalar(c));
    }
    out.push_back(std::move(t));
  }
  return out;
}

}  // namespace hopfcyc
