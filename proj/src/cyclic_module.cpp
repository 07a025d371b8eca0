#include "hopfcyc/cyclic_module.hpp"

#include <limits>

namespace hopfcyc {

namespace {

enum OpKind : int { kFace = 0, kDegeneracy = 1, kCyclic = 2 };

std::size_t ipow(std::size_t base, unsigned exp) {
  std::size_t r = 1;
  for (unsigned k = 0; k < exp; ++k) {
    if (base != 0 && r > std::numeric_limits<std::uint32_t>::max() / base) {
      throw std::length_error("tensor power too large: " + std::to_string(base) + "^" +
                              std::to_string(exp));
    }
    r *= base;
  }
  return r;
}

std::string witness_for(const CyclicModuleView& m, unsigned source, unsigned target,
                        const SparseMatrix& lhs, const SparseMatrix& rhs) {
  auto const col = first_difference(lhs, rhs);
  if (!col) {
    return {};
  }
  return "on " + m.basis_label(source, *col) + ": lhs = " + m.format(target, lhs.column(*col)) +
         ", rhs = " + m.format(target, rhs.column(*col));
}

}  // namespace

std::string CyclicModuleView::format(unsigned n, const SparseVector& v) const {
  if (v.empty()) {
    return "0";
  }
  std::string out;
  bool first = true;
  for (const auto& [k, c] : v) {
    bool const neg = c.is_rational() && sgn(c.rational_value()) < 0;
    std::string mag = c.to_string();
    if (neg) mag = mag.substr(1);
    if (!c.is_rational()) mag = "(" + mag + ")";
    out += first ? (neg ? "-" : "") : (neg ? " - " : " + ");
    if (mag != "1") out += mag + "*";
    out += basis_label(n, k);
    first = false;
  }
  return out;
}

const SparseMatrix& generator_matrix(const CyclicModuleView& m, const Generator& g) {
  switch (g.kind) {
    case Generator::Kind::Face:
      return m.face(g.index, g.degree);
    case Generator::Kind::Degeneracy:
      return m.degeneracy(g.index, g.degree);
    case Generator::Kind::Cyclic:
      break;
  }
  return m.cyclic(g.degree);
}

SparseMatrix word_matrix(const CyclicModuleView& m, const Word& w) {
  w.validate();
  if (w.generators.empty()) {
    return SparseMatrix::identity(m.dim(w.source));
  }
  SparseMatrix out = generator_matrix(m, w.generators.back());
  for (auto it = std::next(w.generators.rbegin()); it != w.generators.rend(); ++it) {
    out = multiply(generator_matrix(m, *it), out);
  }
  return out;
}

SparseMatrix morphism_matrix(const CyclicModuleView& m, const LambdaMorphism& f) {
  return word_matrix(m, f.canonical_word());
}

CheckReport relation_suite(const CyclicModuleView& m, unsigned max_degree) {
  auto const catalog = relation_catalog(max_degree);
  std::vector<CheckItem> items(catalog.size());
  auto const count = static_cast<long>(catalog.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (long k = 0; k < count; ++k) {
    const Relation& r = catalog[static_cast<std::size_t>(k)];
    CheckItem& item = items[static_cast<std::size_t>(k)];
    item.id = r.id;
    item.degree = static_cast<int>(r.degree);
    item.instance = r.instance;
    SparseMatrix const lhs = word_matrix(m, r.lhs);
    SparseMatrix const rhs = word_matrix(m, r.rhs);
    if (!(lhs == rhs)) {
      item.passed = false;
      item.witness = witness_for(m, r.lhs.source, r.lhs.target(), lhs, rhs);
    }
  }
  CheckReport report;
  for (auto& item : items) report.add(std::move(item));
  return report;
}

CheckReport functoriality_suite(const CyclicModuleView& m, unsigned max_degree,
                                std::size_t words_per_degree, std::uint64_t seed) {
  CheckReport report;
  std::mt19937_64 rng(seed);
  for (unsigned n = 0; n <= max_degree; ++n) {
    CheckItem item;
    item.id = "functoriality";
    item.degree = static_cast<int>(n);
    item.instance = "words=" + std::to_string(words_per_degree);
    for (std::size_t k = 0; k < words_per_degree; ++k) {
      Word const w = random_word(rng, n, max_degree, 6);
      auto const f = LambdaMorphism::from_word(w);
      Word const canonical = f.canonical_word();
      SparseMatrix const lhs = word_matrix(m, w);
      SparseMatrix const rhs = word_matrix(m, canonical);
      if (!(lhs == rhs) && item.passed) {
        item.passed = false;
        item.witness = w.to_string() + " vs " + canonical.to_string() + " " +
                       witness_for(m, w.source, n, lhs, rhs);
      }
    }
    report.add(std::move(item));
  }
  return report;
}

CheckReport normal_form_suite(unsigned max_degree) {
  CheckReport report;
  for (const auto& r : relation_catalog(max_degree)) {
    CheckItem item;
    item.id = r.id;
    item.degree = static_cast<int>(r.degree);
    item.instance = r.instance;
    auto const l = LambdaMorphism::from_word(r.lhs);
    auto const rr = LambdaMorphism::from_word(r.rhs);
    if (!(l == rr)) {
      item.passed = false;
      item.witness = "lhs = " + l.to_string() + ", rhs = " + rr.to_string();
    }
    report.add(std::move(item));
  }
  return report;
}

HopfCyclicModule::HopfCyclicModule(FiniteHopf h, Character delta)
    : model_(std::move(h), std::move(delta)), d_(model_.hopf().dim()),
      cache_(std::make_shared<Cache>()) {}

std::size_t HopfCyclicModule::dim(unsigned n) const { return ipow(d_, n); }

std::vector<BasisIndex> HopfCyclicModule::decode(unsigned n, std::size_t index) const {
  std::vector<BasisIndex> t(n);
  for (unsigned k = n; k-- > 0;) {
    t[k] = static_cast<BasisIndex>(index % d_);
    index /= d_;
  }
  return t;
}

std::size_t HopfCyclicModule::encode(const std::vector<BasisIndex>& tuple) const {
  std::size_t index = 0;
  for (auto b : tuple) index = index * d_ + b;
  return index;
}

Tensor<BasisIndex> HopfCyclicModule::to_tensor(unsigned n, const SparseVector& v) const {
  Tensor<BasisIndex> t;
  for (const auto& [k, c] : v) accumulate(t, decode(n, k), c);
  return t;
}

SparseVector HopfCyclicModule::from_tensor(const Tensor<BasisIndex>& t) const {
  std::vector<SparseVector::Entry> e;
  e.reserve(t.size());
  for (const auto& [tuple, c] : t) e.emplace_back(encode(tuple), c);
  return SparseVector::from_entries(std::move(e));
}

std::string HopfCyclicModule::basis_label(unsigned n, std::size_t index) const {
  return hopf().format_tuple(decode(n, index));
}

std::optional<std::string> HopfCyclicModule::cyclicity_obstruction() const {
  std::lock_guard<std::mutex> lock(cache_->mutex);
  if (!cache_->obstruction) {
    auto const inv = check_involution(hopf(), character());
    cache_->obstruction = inv.holds ? std::optional<std::string>()
                                    : std::optional<std::string>("twisted antipode is not an "
                                                                 "involution: " + inv.detail);
  }
  return *cache_->obstruction;
}

namespace {

template <class Build>
const SparseMatrix& cached(std::mutex& mutex,
                           std::map<std::tuple<int, unsigned, unsigned>,
                                    std::unique_ptr<SparseMatrix>>& store,
                           std::tuple<int, unsigned, unsigned> key, Build&& build) {
  {
    std::lock_guard<std::mutex> lock(mutex);
    auto it = store.find(key);
    if (it != store.end()) return *it->second;
  }
  auto built = std::make_unique<SparseMatrix>(build());
  std::lock_guard<std::mutex> lock(mutex);
  auto [it, inserted] = store.emplace(key, std::move(built));
  return *it->second;
}

}  // namespace

const SparseMatrix& HopfCyclicModule::face(unsigned i, unsigned n) const {
  if (n == 0 || i > n) {
    throw std::out_of_range("face index " + std::to_string(i) + " at degree " + std::to_string(n));
  }
  return cached(cache_->mutex, cache_->matrices, {kFace, i, n},
                [&] { return assemble_face(i, n); });
}

const SparseMatrix& HopfCyclicModule::degeneracy(unsigned i, unsigned n) const {
  if (i > n) {
    throw std::out_of_range("degeneracy index " + std::to_string(i) + " at degree " +
                            std::to_string(n));
  }
  return cached(cache_->mutex, cache_->matrices, {kDegeneracy, i, n},
                [&] { return assemble_degeneracy(i, n); });
}

const SparseMatrix& HopfCyclicModule::cyclic(unsigned n) const {
  return cached(cache_->mutex, cache_->matrices, {kCyclic, 0, n},
                [&] { return assemble_cyclic(n); });
}

SparseMatrix HopfCyclicModule::assemble_face(unsigned i, unsigned n) const {
  if (n == 0 || i > n) {
    throw std::out_of_range("face index " + std::to_string(i) + " at degree " + std::to_string(n));
  }
  std::size_t const cols = dim(n - 1);
  std::size_t const rows = dim(n);
  const FiniteHopf& h = hopf();
  std::vector<SparseVector> columns(cols);
  auto const ncols = static_cast<long>(cols);
  if (i == 0 || i == n) {
    std::size_t const shift = i == 0 ? dim(n - 1) : 1;
#pragma omp parallel for schedule(static)
    for (long c = 0; c < ncols; ++c) {
      auto const col = static_cast<std::size_t>(c);
      std::vector<SparseVector::Entry> e;
      for (const auto& [u, cu] : h.unit()) {
        e.emplace_back(i == 0 ? u * shift + col : col * d_ + u, cu);
      }
      columns[col] = SparseVector::from_entries(std::move(e));
    }
  } else {
    // Slot i (1-based) of a length n-1 tuple is split by the coproduct.
    std::size_t const low_size = dim(n - 1 - i);
#pragma omp parallel for schedule(static)
    for (long c = 0; c < ncols; ++c) {
      auto const col = static_cast<std::size_t>(c);
      std::size_t const low = col % low_size;
      std::size_t const digit = (col / low_size) % d_;
      std::size_t const high = col / low_size / d_;
      std::vector<SparseVector::Entry> e;
      for (const auto& [pair, cp] : h.coproduct(static_cast<BasisIndex>(digit))) {
        e.emplace_back(((high * d_ + pair[0]) * d_ + pair[1]) * low_size + low, cp);
      }
      columns[col] = SparseVector::from_entries(std::move(e));
    }
  }
  return {rows, std::move(columns)};
}

SparseMatrix HopfCyclicModule::assemble_degeneracy(unsigned i, unsigned n) const {
  if (i > n) {
    throw std::out_of_range("degeneracy index " + std::to_string(i) + " at degree " +
                            std::to_string(n));
  }
  std::size_t const cols = dim(n + 1);
  std::size_t const low_size = dim(n - i);
  const FiniteHopf& h = hopf();
  std::vector<SparseVector> columns(cols);
  auto const ncols = static_cast<long>(cols);
#pragma omp parallel for schedule(static)
  for (long c = 0; c < ncols; ++c) {
    auto const col = static_cast<std::size_t>(c);
    std::size_t const low = col % low_size;
    std::size_t const digit = (col / low_size) % d_;
    std::size_t const high = col / low_size / d_;
    const Scalar& e = h.counit(static_cast<BasisIndex>(digit));
    if (!e.is_zero()) {
      columns[col] = SparseVector::unit(high * low_size + low, e);
    }
  }
  return {dim(n), std::move(columns)};
}

SparseMatrix HopfCyclicModule::assemble_cyclic(unsigned n) const {
  if (n == 0) {
    return SparseMatrix::identity(1);
  }
  const FiniteHopf& h = hopf();
  // Delta^{n-1} S~(e_b) for every basis element b.
  std::vector<std::vector<std::pair<std::vector<BasisIndex>, Scalar>>> split(d_);
  for (BasisIndex b = 0; b < d_; ++b) {
    for (auto& [tuple, c] : tensor::iterated_coproduct(model_, model_.twisted_antipode(b), n)) {
      split[b].emplace_back(tuple, c);
    }
  }
  std::size_t const cols = dim(n);
  std::vector<SparseVector> columns(cols);
  auto const ncols = static_cast<long>(cols);
#pragma omp parallel for schedule(dynamic, 16)
  for (long c = 0; c < ncols; ++c) {
    auto const col = static_cast<std::size_t>(c);
    std::vector<BasisIndex> const t = decode(n, col);
    VectorAccumulator acc;
    std::vector<std::pair<std::size_t, Scalar>> partial;
    std::vector<std::pair<std::size_t, Scalar>> next;
    for (const auto& [u, cu] : h.unit()) {
      for (const auto& [k, ck] : split[t[0]]) {
        partial.assign(1, {0, ck * cu});
        for (unsigned s = 0; s < n && !partial.empty(); ++s) {
          const Element& prod = h.product(k[s], s + 1 < n ? t[s + 1] : u);
          next.clear();
          for (const auto& [idx, val] : partial)
            for (const auto& [r, cr] : prod) next.emplace_back(idx * d_ + r, val * cr);
          partial.swap(next);
        }
        for (const auto& [idx, val] : partial) acc.add(idx, val);
      }
    }
    columns[col] = acc.finish();
  }
  return {dim(n), std::move(columns)};
}

template <class F>
SparseMatrix HopfCyclicModule::reference_matrix(unsigned from, unsigned to, F&& op) const {
  std::size_t const cols = dim(from);
  std::vector<SparseVector> columns(cols);
  for (std::size_t c = 0; c < cols; ++c) {
    Tensor<BasisIndex> t;
    accumulate(t, decode(from, c), Scalar(1));
    columns[c] = from_tensor(op(t));
  }
  return {dim(to), std::move(columns)};
}

SparseMatrix HopfCyclicModule::reference_face(unsigned i, unsigned n) const {
  if (n == 0) {
    throw std::out_of_range("face at degree 0");
  }
  return reference_matrix(n - 1, n, [&](const auto& t) { return tensor::face(model_, i, n, t); });
}

SparseMatrix HopfCyclicModule::reference_degeneracy(unsigned i, unsigned n) const {
  return reference_matrix(n + 1, n,
                          [&](const auto& t) { return tensor::degeneracy(model_, i, n, t); });
}

SparseMatrix HopfCyclicModule::reference_cyclic(unsigned n) const {
  return reference_matrix(n, n, [&](const auto& t) { return tensor::cyclic(model_, n, t); });
}

std::vector<std::vector<Element>> random_pure_tensors(const FiniteHopf& h, unsigned n,
                                                      std::size_t count, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> coef(-3, 3);
  std::vector<std::vector<Element>> out;
  out.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    std::vector<Element> factors(n);
    for (auto& f : factors) {
      for (BasisIndex b = 0; b < h.dim(); ++b) accumulate(f, b, Scalar(coef(rng)));
    }
    out.push_back(std::move(factors));
  }
  return out;
}

}  // namespace hopfcyc
