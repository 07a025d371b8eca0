#include "hopfcyc/algebra.hpp"

namespace hopfcyc {

FiniteAlgebra::FiniteAlgebra(Presentation p) : p_(std::move(p)) {
  std::size_t const d = p_.basis.size();
  if (d == 0) {
    throw InvalidAlgebra("algebra must have positive dimension");
  }
  if (p_.unit.size() != d) {
    throw InvalidAlgebra("unit needs one coefficient per basis element");
  }
  for (BasisIndex i = 0; i < d; ++i) accumulate(unit_, i, p_.unit[i]);
  product_.assign(d * d, {});
  for (const auto& t : p_.product) {
    if (t.a >= d || t.b >= d || t.c >= d) {
      throw InvalidAlgebra("product index out of range");
    }
    accumulate(product_[t.a * d + t.b], t.c, t.coef);
  }
  for (BasisIndex i = 0; i < d; ++i) {
    if (multiply(unit_, basis_element(i)) != basis_element(i) ||
        multiply(basis_element(i), unit_) != basis_element(i)) {
      throw InvalidAlgebra("unit law fails for " + p_.basis[i]);
    }
    for (BasisIndex j = 0; j < d; ++j)
      for (BasisIndex k = 0; k < d; ++k) {
        if (multiply(product(i, j), basis_element(k)) != multiply(basis_element(i), product(j, k))) {
          throw InvalidAlgebra("associativity fails for (" + p_.basis[i] + ", " + p_.basis[j] +
                               ", " + p_.basis[k] + ")");
        }
      }
  }
}

Element FiniteAlgebra::multiply(const Element& a, const Element& b) const {
  Element out;
  for (const auto& [i, x] : a)
    for (const auto& [j, y] : b) accumulate_all(out, product(i, j), x * y);
  return out;
}

std::string FiniteAlgebra::format(const Element& x) const {
  if (x.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [k, c] : x) {
    bool const neg = c.is_rational() && sgn(c.rational_value()) < 0;
    std::string mag = c.to_string();
    if (neg) mag = mag.substr(1);
    if (!c.is_rational()) mag = "(" + mag + ")";
    out += first ? (neg ? "-" : "") : (neg ? " - " : " + ");
    if (mag != "1") out += mag + "*";
    out += p_.basis[k];
    first = false;
  }
  return out;
}

FiniteAlgebra FiniteAlgebra::scalars() {
  return FiniteAlgebra({"k", {}, {"1"}, {1}, {{0, 0, 0, Scalar(1)}}});
}

FiniteAlgebra FiniteAlgebra::matrices(unsigned q) {
  Presentation p;
  p.name = "M" + std::to_string(q);
  auto idx = [q](unsigned i, unsigned j) { return static_cast<BasisIndex>(i * q + j); };
  for (unsigned i = 0; i < q; ++i)
    for (unsigned j = 0; j < q; ++j) p.basis.push_back("e" + std::to_string(i + 1) + std::to_string(j + 1));
  p.unit.assign(q * q, Scalar());
  for (unsigned i = 0; i < q; ++i) p.unit[idx(i, i)] = Scalar(1);
  for (unsigned i = 0; i < q; ++i)
    for (unsigned j = 0; j < q; ++j)
      for (unsigned k = 0; k < q; ++k) p.product.push_back({idx(i, j), idx(j, k), idx(i, k), 1});
  return FiniteAlgebra(std::move(p));
}

FiniteAlgebra FiniteAlgebra::underlying(const FiniteHopf& h) {
  const auto& hp = h.presentation();
  return FiniteAlgebra({hp.name, hp.field, hp.basis, hp.unit, hp.product});
}

AlgebraCochainModule::AlgebraCochainModule(FiniteAlgebra a)
    : a_(std::move(a)), d_(a_.dim()), cache_(std::make_shared<Cache>()) {}

std::size_t AlgebraCochainModule::dim(unsigned n) const {
  std::size_t r = 1;
  for (unsigned k = 0; k <= n; ++k) {
    r *= d_;
    if (r > (std::size_t{1} << 32)) {
      throw std::length_error("cochain space too large");
    }
  }
  return r;
}

std::vector<BasisIndex> AlgebraCochainModule::decode(unsigned n, std::size_t index) const {
  std::vector<BasisIndex> t(n + 1);
  for (unsigned k = n + 1; k-- > 0;) {
    t[k] = static_cast<BasisIndex>(index % d_);
    index /= d_;
  }
  return t;
}

std::size_t AlgebraCochainModule::encode(const std::vector<BasisIndex>& tuple) const {
  std::size_t index = 0;
  for (auto b : tuple) index = index * d_ + b;
  return index;
}

std::string AlgebraCochainModule::basis_label(unsigned n, std::size_t index) const {
  std::string out = "(";
  auto const t = decode(n, index);
  for (std::size_t k = 0; k < t.size(); ++k) out += (k ? "," : "") + a_.label(t[k]);
  return out + ")*";
}

namespace {

enum : int { kFace = 0, kDegeneracy = 1, kCyclic = 2 };

}  // namespace

SparseMatrix AlgebraCochainModule::build(int kind, unsigned i, unsigned n) const {
  // Predual map on argument tuples; the cochain operator is its transpose.
  unsigned const arg_degree = n;  // arguments x0..xn of the target cochain
  unsigned const image_degree = kind == kFace ? n - 1 : (kind == kDegeneracy ? n + 1 : n);
  std::size_t const cols = dim(arg_degree);
  std::vector<SparseVector> columns(cols);
  auto const ncols = static_cast<long>(cols);
#pragma omp parallel for schedule(static)
  for (long c = 0; c < ncols; ++c) {
    auto const col = static_cast<std::size_t>(c);
    std::vector<BasisIndex> const x = decode(arg_degree, col);
    std::vector<SparseVector::Entry> e;
    if (kind == kFace) {
      bool const wrap = i == n;
      BasisIndex const l = wrap ? x[n] : x[i];
      BasisIndex const r = wrap ? x[0] : x[i + 1];
      for (const auto& [p, cp] : a_.product(l, r)) {
        std::vector<BasisIndex> y;
        if (wrap) {
          y.push_back(p);
          y.insert(y.end(), x.begin() + 1, x.begin() + n);
        } else {
          y.assign(x.begin(), x.begin() + i);
          y.push_back(p);
          y.insert(y.end(), x.begin() + i + 2, x.end());
        }
        e.emplace_back(encode(y), cp);
      }
    } else if (kind == kDegeneracy) {
      for (const auto& [u, cu] : a_.unit()) {
        std::vector<BasisIndex> y(x.begin(), x.begin() + i + 1);
        y.push_back(u);
        y.insert(y.end(), x.begin() + i + 1, x.end());
        e.emplace_back(encode(y), cu);
      }
    } else {
      std::vector<BasisIndex> y;
      y.push_back(x[n]);
      y.insert(y.end(), x.begin(), x.begin() + n);
      e.emplace_back(encode(y), Scalar(1));
    }
    columns[col] = SparseVector::from_entries(std::move(e));
  }
  return SparseMatrix(dim(image_degree), std::move(columns)).transpose();
}

namespace {

template <class Build>
const SparseMatrix& lookup(std::mutex& mutex,
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
  return *store.emplace(key, std::move(built)).first->second;
}

}  // namespace

const SparseMatrix& AlgebraCochainModule::face(unsigned i, unsigned n) const {
  if (n == 0 || i > n) {
    throw std::out_of_range("face index " + std::to_string(i) + " at degree " + std::to_string(n));
  }
  return lookup(cache_->mutex, cache_->matrices, {kFace, i, n},
                [&] { return build(kFace, i, n); });
}

const SparseMatrix& AlgebraCochainModule::degeneracy(unsigned i, unsigned n) const {
  if (i > n) {
    throw std::out_of_range("degeneracy index " + std::to_string(i) + " at degree " +
                            std::to_string(n));
  }
  return lookup(cache_->mutex, cache_->matrices, {kDegeneracy, i, n},
                [&] { return build(kDegeneracy, i, n); });
}

const SparseMatrix& AlgebraCochainModule::cyclic(unsigned n) const {
  return lookup(cache_->mutex, cache_->matrices, {kCyclic, 0, n},
                [&] { return build(kCyclic, 0, n); });
}

}  // namespace hopfcyc
