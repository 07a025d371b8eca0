#include "hopfcyc/lambda.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace hopfcyc {

namespace {

long floor_div(long a, long b) {
  long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

Generator Generator::face(unsigned i, unsigned n) {
  if (n == 0 || i > n) {
    throw std::out_of_range("face index " + std::to_string(i) + " at degree " + std::to_string(n));
  }
  return {Kind::Face, i, n};
}

Generator Generator::degeneracy(unsigned i, unsigned n) {
  if (i > n) {
    throw std::out_of_range("degeneracy index " + std::to_string(i) + " at degree " +
                            std::to_string(n));
  }
  return {Kind::Degeneracy, i, n};
}

unsigned Generator::source() const {
  switch (kind) {
    case Kind::Face:
      return degree - 1;
    case Kind::Degeneracy:
      return degree + 1;
    case Kind::Cyclic:
      return degree;
  }
  return degree;
}

unsigned Generator::target() const { return degree; }

std::string Generator::to_string() const {
  switch (kind) {
    case Kind::Face:
      return "delta_" + std::to_string(index) + "[" + std::to_string(degree) + "]";
    case Kind::Degeneracy:
      return "sigma_" + std::to_string(index) + "[" + std::to_string(degree) + "]";
    case Kind::Cyclic:
      return "tau[" + std::to_string(degree) + "]";
  }
  return "?";
}

void Word::validate() const {
  for (std::size_t k = 0; k + 1 < generators.size(); ++k) {
    if (generators[k].source() != generators[k + 1].target()) {
      throw NotComposable("cannot compose " + generators[k].to_string() + " after " +
                          generators[k + 1].to_string());
    }
  }
  if (!generators.empty() && generators.back().source() != source) {
    throw NotComposable("word source " + std::to_string(source) + " does not match " +
                        generators.back().to_string());
  }
}

std::string Word::to_string() const {
  if (generators.empty()) {
    return "id[" + std::to_string(source) + "]";
  }
  std::string out;
  for (const auto& g : generators) {
    if (!out.empty()) out += " ";
    out += g.to_string();
  }
  return out;
}

Word make_word(std::vector<Generator> generators) {
  if (generators.empty()) {
    throw std::invalid_argument("make_word needs at least one generator; use Word{object, {}}");
  }
  Word w{generators.back().source(), std::move(generators)};
  w.validate();
  return w;
}

LambdaMorphism::LambdaMorphism(unsigned s, unsigned t, std::vector<long> v)
    : source_(s), target_(t), values_(std::move(v)) {
  normalize();
}

void LambdaMorphism::normalize() {
  long const q = static_cast<long>(target_) + 1;
  long const shift = floor_div(values_.front(), q) * q;
  for (auto& v : values_) v -= shift;
}

LambdaMorphism LambdaMorphism::identity(unsigned object) {
  std::vector<long> v(object + 1);
  for (unsigned x = 0; x <= object; ++x) v[x] = x;
  return {object, object, std::move(v)};
}

LambdaMorphism LambdaMorphism::from_generator(const Generator& g) {
  std::vector<long> v(g.source() + 1);
  for (long x = 0; x < static_cast<long>(v.size()); ++x) {
    switch (g.kind) {
      case Generator::Kind::Face:
        v[x] = x < static_cast<long>(g.index) ? x : x + 1;
        break;
      case Generator::Kind::Degeneracy:
        v[x] = x <= static_cast<long>(g.index) ? x : x - 1;
        break;
      case Generator::Kind::Cyclic:
        v[x] = x - 1;
        break;
    }
  }
  return {g.source(), g.target(), std::move(v)};
}

LambdaMorphism LambdaMorphism::from_word(const Word& w) {
  w.validate();
  LambdaMorphism f = identity(w.source);
  for (auto it = w.generators.rbegin(); it != w.generators.rend(); ++it) {
    f = compose(from_generator(*it), f);
  }
  return f;
}

LambdaMorphism LambdaMorphism::from_values(unsigned source, unsigned target,
                                           std::vector<long> values) {
  if (values.size() != source + 1) {
    throw std::invalid_argument("morphism needs one value per element of the source");
  }
  for (std::size_t x = 0; x + 1 < values.size(); ++x) {
    if (values[x] > values[x + 1]) {
      throw std::invalid_argument("morphism values must be nondecreasing");
    }
  }
  if (values.back() > values.front() + static_cast<long>(target) + 1) {
    throw std::invalid_argument("morphism values violate periodicity");
  }
  return {source, target, std::move(values)};
}

long LambdaMorphism::operator()(long x) const {
  long const p = static_cast<long>(source_) + 1;
  long const q = static_cast<long>(target_) + 1;
  long const d = floor_div(x, p);
  return values_[static_cast<std::size_t>(x - d * p)] + d * q;
}

LambdaMorphism compose(const LambdaMorphism& f, const LambdaMorphism& g) {
  if (g.target() != f.source()) {
    throw NotComposable("cannot compose morphism out of [" + std::to_string(f.source()) +
                        "] after morphism into [" + std::to_string(g.target()) + "]");
  }
  std::vector<long> v(g.source() + 1);
  for (long x = 0; x < static_cast<long>(v.size()); ++x) v[x] = f(g(x));
  return LambdaMorphism::from_values(g.source(), f.target(), std::move(v));
}

unsigned LambdaMorphism::cyclic_exponent() const {
  long const p = static_cast<long>(source_) + 1;
  long const q = static_cast<long>(target_) + 1;
  for (long k = 0; k < p; ++k) {
    if (floor_div((*this)(k), q) == floor_div((*this)(k + p - 1), q)) {
      return static_cast<unsigned>(k);
    }
  }
  throw std::logic_error("morphism has no cyclic factorization: " + to_string());
}

Word LambdaMorphism::canonical_word() const {
  long const p = static_cast<long>(source_) + 1;
  long const q = static_cast<long>(target_) + 1;
  unsigned const k = cyclic_exponent();
  long const base = floor_div((*this)(k), q) * q;
  std::vector<long> phi(static_cast<std::size_t>(p));
  for (long y = 0; y < p; ++y) phi[y] = (*this)(k + y) - base;

  std::set<long> const image(phi.begin(), phi.end());
  std::vector<unsigned> missing;  // descending
  for (long v = q - 1; v >= 0; --v) {
    if (!image.contains(v)) missing.push_back(static_cast<unsigned>(v));
  }
  std::vector<unsigned> repeats;  // ascending
  for (long y = 0; y + 1 < p; ++y) {
    if (phi[y] == phi[y + 1]) repeats.push_back(static_cast<unsigned>(y));
  }

  Word w;
  w.source = source_;
  for (std::size_t u = 0; u < missing.size(); ++u) {
    w.generators.push_back(Generator::face(missing[u], target_ - static_cast<unsigned>(u)));
  }
  auto const t = static_cast<unsigned>(repeats.size());
  for (unsigned u = 0; u < t; ++u) {
    w.generators.push_back(Generator::degeneracy(repeats[u], source_ - t + u));
  }
  for (unsigned r = 0; r < k; ++r) w.generators.push_back(Generator::cyclic(source_));
  return w;
}

std::string LambdaMorphism::to_string() const {
  std::string out = "[" + std::to_string(source_) + "]->[" + std::to_string(target_) + "] (";
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(values_[i]);
  }
  return out + ")";
}

std::vector<Relation> relation_catalog(unsigned max_object) {
  using G = Generator;
  std::vector<Relation> out;
  auto idx = [](const char* name, unsigned v) { return std::string(name) + "=" + std::to_string(v); };

  for (unsigned d = 0; d <= max_object; ++d) {
    // Simplicial identities whose largest object is [d].
    if (d >= 2) {
      unsigned const n = d - 1;  // delta_j[n+1] delta_i[n]
      for (unsigned j = 1; j <= n + 1; ++j) {
        for (unsigned i = 0; i < j; ++i) {
          out.push_back({"delta_delta", idx("j", j) + " " + idx("i", i), d,
                         make_word({G::face(j, n + 1), G::face(i, n)}),
                         make_word({G::face(i, n + 1), G::face(j - 1, n)})});
        }
      }
    }
    if (d >= 2) {
      unsigned const n = d - 1;  // sigma_j[n-1] sigma_i[n]
      for (unsigned j = 0; j + 1 <= n; ++j) {
        for (unsigned i = 0; i <= j; ++i) {
          out.push_back({"sigma_sigma", idx("j", j) + " " + idx("i", i), d,
                         make_word({G::degeneracy(j, n - 1), G::degeneracy(i, n)}),
                         make_word({G::degeneracy(i, n - 1), G::degeneracy(j + 1, n)})});
        }
      }
    }
    if (d >= 1) {
      unsigned const n = d;  // sigma_j[n-1] delta_i[n]
      for (unsigned j = 0; j + 1 <= n; ++j) {
        for (unsigned i = 0; i <= n; ++i) {
          Word rhs;
          if (i < j) {
            rhs = make_word({G::face(i, n - 1), G::degeneracy(j - 1, n - 2)});
          } else if (i == j || i == j + 1) {
            rhs = Word{n - 1, {}};
          } else {
            rhs = make_word({G::face(i - 1, n - 1), G::degeneracy(j, n - 2)});
          }
          out.push_back({"sigma_delta", idx("j", j) + " " + idx("i", i), d,
                         make_word({G::degeneracy(j, n - 1), G::face(i, n)}), rhs});
        }
      }
    }
    if (d >= 1) {
      unsigned const n = d;
      out.push_back({"tau_delta0", idx("n", n), d, make_word({G::cyclic(n), G::face(0, n)}),
                     make_word({G::face(n, n)})});
      for (unsigned i = 1; i <= n; ++i) {
        out.push_back({"tau_delta", idx("n", n) + " " + idx("i", i), d,
                       make_word({G::cyclic(n), G::face(i, n)}),
                       make_word({G::face(i - 1, n), G::cyclic(n - 1)})});
      }
      unsigned const m = d - 1;  // tau_m sigma_i involves [m+1] = [d]
      out.push_back({"tau_sigma0", idx("n", m), d, make_word({G::cyclic(m), G::degeneracy(0, m)}),
                     make_word({G::degeneracy(m, m), G::cyclic(m + 1), G::cyclic(m + 1)})});
      for (unsigned i = 1; i <= m; ++i) {
        out.push_back({"tau_sigma", idx("n", m) + " " + idx("i", i), d,
                       make_word({G::cyclic(m), G::degeneracy(i, m)}),
                       make_word({G::degeneracy(i - 1, m), G::cyclic(m + 1)})});
      }
    }
    {
      std::vector<G> power(d + 1, G::cyclic(d));
      out.push_back({"tau_power", idx("n", d), d, make_word(std::move(power)), Word{d, {}}});
    }
  }
  std::stable_sort(out.begin(), out.end(), [](const Relation& a, const Relation& b) {
    if (a.degree != b.degree) return a.degree < b.degree;
    return a.id < b.id;
  });
  return out;
}

Word random_word(std::mt19937_64& rng, unsigned target, unsigned max_object,
                 unsigned max_length) {
  std::uniform_int_distribution<unsigned> len_dist(1, std::max(1U, max_length));
  unsigned const length = len_dist(rng);
  Word w;
  unsigned current = target;
  for (unsigned step = 0; step < length; ++step) {
    std::vector<Generator> options;
    if (current >= 1) {
      for (unsigned i = 0; i <= current; ++i) options.push_back(Generator::face(i, current));
    }
    if (current + 1 <= max_object) {
      for (unsigned i = 0; i <= current; ++i) options.push_back(Generator::degeneracy(i, current));
    }
    options.push_back(Generator::cyclic(current));
    std::uniform_int_distribution<std::size_t> pick(0, options.size() - 1);
    Generator const g = options[pick(rng)];
    w.generators.push_back(g);
    current = g.source();
  }
  w.source = current;
  return w;
}

}  // namespace hopfcyc
