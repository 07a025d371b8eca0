#ifndef HOPFCYC_ALGEBRA_HPP
#define HOPFCYC_ALGEBRA_HPP

#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "hopfcyc/cyclic_module.hpp"
#include "hopfcyc/finite_hopf.hpp"

namespace hopfcyc {

class InvalidAlgebra : public std::invalid_argument {
 public:
  explicit InvalidAlgebra(const std::string& what) : std::invalid_argument(what) {}
};

/// Finite-dimensional unital associative algebra by structure constants.
/// Associativity and the unit law are checked on construction.
class FiniteAlgebra {
 public:
  struct Presentation {
    std::string name;
    FieldSpec field;
    std::vector<std::string> basis;
    std::vector<Scalar> unit;
    std::vector<StructureTerm> product;
  };

  explicit FiniteAlgebra(Presentation p);

  const std::string& name() const { return p_.name; }
  const FieldSpec& field() const { return p_.field; }
  std::size_t dim() const { return p_.basis.size(); }
  const std::vector<std::string>& basis_labels() const { return p_.basis; }
  const Presentation& presentation() const { return p_; }

  const Element& unit() const { return unit_; }
  const Element& product(BasisIndex i, BasisIndex j) const { return product_[i * dim() + j]; }
  Element multiply(const Element& a, const Element& b) const;
  Element basis_element(BasisIndex i) const { return {{i, Scalar(1)}}; }

  std::string label(BasisIndex i) const { return p_.basis.at(i); }
  std::string format(const Element& x) const;

  /// The ground field as a one-dimensional algebra.
  static FiniteAlgebra scalars();
  /// M_q(k) with basis e<i><j> (1-based), row-major.
  static FiniteAlgebra matrices(unsigned q);
  /// The algebra underlying a Hopf algebra.
  static FiniteAlgebra underlying(const FiniteHopf& h);

 private:
  Presentation p_;
  Element unit_;
  std::vector<Element> product_;
};

/// The cochains C^n(A) = (A^{(x)(n+1)})^* with the operators
///   (delta_i phi)(x0..xn) = phi(x0, .., x_i x_{i+1}, .., xn), i < n,
///   (delta_n phi)(x0..xn) = phi(xn x0, x1, .., x_{n-1}),
///   (sigma_i phi)(x0..xn) = phi(x0, .., x_i, 1, x_{i+1}, .., xn),
///   (tau_n phi)(x0..xn)   = phi(xn, x0, .., x_{n-1}),
/// in the dual basis of lexicographically ordered basis tuples.
class AlgebraCochainModule : public CyclicModuleView {
 public:
  explicit AlgebraCochainModule(FiniteAlgebra a);

  const FiniteAlgebra& algebra() const { return a_; }

  std::string name() const override { return a_.name(); }
  std::size_t dim(unsigned n) const override;
  const SparseMatrix& face(unsigned i, unsigned n) const override;
  const SparseMatrix& degeneracy(unsigned i, unsigned n) const override;
  const SparseMatrix& cyclic(unsigned n) const override;
  std::optional<std::string> cyclicity_obstruction() const override { return std::nullopt; }
  std::string basis_label(unsigned n, std::size_t index) const override;

  /// Argument tuple (x0, .., xn) of dual basis vector `index` of C^n.
  std::vector<BasisIndex> decode(unsigned n, std::size_t index) const;
  std::size_t encode(const std::vector<BasisIndex>& tuple) const;

 private:
  SparseMatrix build(int kind, unsigned i, unsigned n) const;

  FiniteAlgebra a_;
  std::size_t d_;
  struct Cache {
    std::mutex mutex;
    std::map<std::tuple<int, unsigned, unsigned>, std::unique_ptr<SparseMatrix>> matrices;
  };
  std::shared_ptr<Cache> cache_;
};

}  // namespace hopfcyc

#endif  // HOPFCYC_ALGEBRA_HPP
