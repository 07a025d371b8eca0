#ifndef HOPFCYC_CYCLIC_MODULE_HPP
#define HOPFCYC_CYCLIC_MODULE_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <random>
#include <string>
#include <tuple>
#include <vector>

#include "hopfcyc/finite_hopf.hpp"
#include "hopfcyc/lambda.hpp"
#include "hopfcyc/report.hpp"
#include "hopfcyc/sparse.hpp"
#include "hopfcyc/tensor.hpp"

namespace hopfcyc {

class NotCyclic : public std::runtime_error {
 public:
  explicit NotCyclic(const std::string& what) : std::runtime_error(what) {}
};

/// A cyclic module realized by matrices: spaces C^n with faces
/// C^{n-1} -> C^n, degeneracies C^{n+1} -> C^n and cyclic operators on C^n.
class CyclicModuleView {
 public:
  virtual ~CyclicModuleView() = default;

  virtual std::string name() const = 0;
  virtual std::size_t dim(unsigned n) const = 0;
  virtual const SparseMatrix& face(unsigned i, unsigned n) const = 0;
  virtual const SparseMatrix& degeneracy(unsigned i, unsigned n) const = 0;
  virtual const SparseMatrix& cyclic(unsigned n) const = 0;
  /// Why tau_n^{n+1} = 1 may fail, or nullopt when the module is known to
  /// be cyclic.
  virtual std::optional<std::string> cyclicity_obstruction() const = 0;
  /// Human-readable label of basis vector `index` of C^n.
  virtual std::string basis_label(unsigned n, std::size_t index) const = 0;

  std::string format(unsigned n, const SparseVector& v) const;
};

/// Matrix of a generator.
const SparseMatrix& generator_matrix(const CyclicModuleView& m, const Generator& g);
/// Matrix of a composition word; the empty word gives the identity.
SparseMatrix word_matrix(const CyclicModuleView& m, const Word& w);
/// Matrix of a morphism through its canonical factorization.
SparseMatrix morphism_matrix(const CyclicModuleView& m, const LambdaMorphism& f);

/// Every catalog relation with objects in [0, max_degree] as an exact
/// matrix identity. Items are ordered by (degree, relation id).
CheckReport relation_suite(const CyclicModuleView& m, unsigned max_degree);
/// For each target degree <= max_degree, `words_per_degree` random words:
/// each word's matrix must equal the matrix of its normal form.
CheckReport functoriality_suite(const CyclicModuleView& m, unsigned max_degree,
                                std::size_t words_per_degree, std::uint64_t seed);
/// The catalog evaluated in staircase normal forms.
CheckReport normal_form_suite(unsigned max_degree);

/// H^{(x)n} for a finite-dimensional Hopf algebra with character delta.
/// Basis tuples are ordered lexicographically with the first slot most
/// significant. Operator matrices are assembled column-parallel and cached.
class HopfCyclicModule : public CyclicModuleView {
 public:
  HopfCyclicModule(FiniteHopf h, Character delta);

  const FiniteHopf& hopf() const { return model_.hopf(); }
  const Character& character() const { return model_.character(); }
  const FiniteHopfModel& model() const { return model_; }

  std::string name() const override { return hopf().name(); }
  std::size_t dim(unsigned n) const override;
  const SparseMatrix& face(unsigned i, unsigned n) const override;
  const SparseMatrix& degeneracy(unsigned i, unsigned n) const override;
  const SparseMatrix& cyclic(unsigned n) const override;
  std::optional<std::string> cyclicity_obstruction() const override;
  std::string basis_label(unsigned n, std::size_t index) const override;

  std::vector<BasisIndex> decode(unsigned n, std::size_t index) const;
  std::size_t encode(const std::vector<BasisIndex>& tuple) const;
  Tensor<BasisIndex> to_tensor(unsigned n, const SparseVector& v) const;
  SparseVector from_tensor(const Tensor<BasisIndex>& t) const;

  /// Uncached single-threaded assembly from the element-level operators.
  SparseMatrix reference_face(unsigned i, unsigned n) const;
  SparseMatrix reference_degeneracy(unsigned i, unsigned n) const;
  SparseMatrix reference_cyclic(unsigned n) const;

  /// Uncached parallel assembly (what the cached accessors use).
  SparseMatrix assemble_face(unsigned i, unsigned n) const;
  SparseMatrix assemble_degeneracy(unsigned i, unsigned n) const;
  SparseMatrix assemble_cyclic(unsigned n) const;

 private:
  template <class F>
  SparseMatrix reference_matrix(unsigned from, unsigned to, F&& op) const;

  FiniteHopfModel model_;
  std::size_t d_;
  struct Cache {
    std::mutex mutex;
    std::map<std::tuple<int, unsigned, unsigned>, std::unique_ptr<SparseMatrix>> matrices;
    std::optional<std::optional<std::string>> obstruction;
  };
  std::shared_ptr<Cache> cache_;
};

namespace symbolic {

template <HopfModel M>
Tensor<typename M::Key> apply(const M& m, const Generator& g, const Tensor<typename M::Key>& t) {
  switch (g.kind) {
    case Generator::Kind::Face:
      return tensor::face(m, g.index, g.degree, t);
    case Generator::Kind::Degeneracy:
      return tensor::degeneracy(m, g.index, g.degree, t);
    case Generator::Kind::Cyclic:
      return tensor::cyclic(m, g.degree, t);
  }
  return t;
}

template <HopfModel M>
Tensor<typename M::Key> apply(const M& m, const Word& w, Tensor<typename M::Key> t) {
  for (auto it = w.generators.rbegin(); it != w.generators.rend(); ++it) t = apply(m, *it, t);
  return t;
}

/// Catalog relations with objects in [0, max_degree], checked on the given
/// sample tensors (indexed by degree).
template <HopfModel M, class Format>
CheckReport relation_suite(const M& m,
                           const std::map<unsigned, std::vector<Tensor<typename M::Key>>>& samples,
                           unsigned max_degree, Format&& format) {
  CheckReport report;
  for (const auto& r : relation_catalog(max_degree)) {
    CheckItem item;
    item.id = r.id;
    item.degree = static_cast<int>(r.degree);
    item.instance = r.instance;
    auto it = samples.find(r.lhs.source);
    if (it != samples.end()) {
      for (const auto& t : it->second) {
        auto const l = apply(m, r.lhs, t);
        auto const rr = apply(m, r.rhs, t);
        if (l != rr) {
          item.passed = false;
          item.witness = "on " + format(t) + ": lhs = " + format(l) + ", rhs = " + format(rr);
          break;
        }
      }
    }
    report.add(std::move(item));
  }
  return report;
}

/// Right-hand side of tau_n^j(h^1 (x) ... (x) h^n) =
/// Delta^{n-1} S~(h^j) . (h^{j+1} (x) ... (x) h^n (x) 1 (x) h^1 (x) ... (x) h^{j-1}),
/// where h^{n+1} = 1 and 1 <= j <= n + 1.
template <HopfModel M>
Tensor<typename M::Key> cyclic_power_formula(const M& m,
                                             const std::vector<LinComb<typename M::Key>>& h,
                                             std::size_t j) {
  using Key = typename M::Key;
  std::size_t const n = h.size();
  if (j == 0 || j > n + 1) {
    throw std::out_of_range("cyclic power formula needs 1 <= j <= n + 1");
  }
  if (n == 0) {
    return tensor::scalar_tensor<Key>(Scalar(1));
  }
  std::vector<LinComb<Key>> cyc(h.begin(), h.end());
  cyc.emplace_back(m.unit());
  LinComb<Key> const twisted = tensor::map_linear(
      cyc[j - 1], [&](const Key& k) { return LinComb<Key>(m.twisted_antipode(k)); });
  std::vector<LinComb<Key>> rest;
  for (std::size_t s = 1; s <= n; ++s) rest.push_back(cyc[(j - 1 + s) % (n + 1)]);
  return tensor::slotwise_product(m, tensor::iterated_coproduct(m, twisted, n),
                                  tensor::pure<Key>(rest));
}

/// Compares tau_n^j against cyclic_power_formula for every 1 <= j <= n + 1
/// on each sample of pure tensors (given by their factors).
template <HopfModel M, class Format>
CheckReport cyclic_power_suite(const M& m,
                               const std::vector<std::vector<LinComb<typename M::Key>>>& samples,
                               Format&& format) {
  CheckReport report;
  std::map<std::pair<std::size_t, std::size_t>, CheckItem> items;
  for (const auto& h : samples) {
    std::size_t const n = h.size();
    auto t = tensor::pure<typename M::Key>(h);
    auto power = t;
    for (std::size_t j = 1; j <= n + 1; ++j) {
      power = tensor::cyclic(m, n, power);
      auto& item = items[{n, j}];
      if (item.id.empty()) {
        item.id = "cyclic_power_formula";
        item.degree = static_cast<int>(n);
        item.instance = "j=" + std::to_string(j);
      }
      if (!item.passed) continue;
      auto const expected = cyclic_power_formula(m, h, j);
      if (power != expected) {
        item.passed = false;
        item.witness = "on " + format(t) + ": tau^j = " + format(power) + ", formula = " +
                       format(expected);
      }
    }
  }
  for (auto& [key, item] : items) report.add(std::move(item));
  return report;
}

}  // namespace symbolic

/// Random pure tensors of degree n over a finite Hopf algebra: each factor
/// is a random combination of basis elements with coefficients in [-3, 3].
std::vector<std::vector<Element>> random_pure_tensors(const FiniteHopf& h, unsigned n,
                                                      std::size_t count, std::mt19937_64& rng);

}  // namespace hopfcyc

#endif  // HOPFCYC_CYCLIC_MODULE_HPP
