#ifndef HOPFCYC_ENVELOPING_HPP
#define HOPFCYC_ENVELOPING_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <random>
#include <string>
#include <vector>

#include "hopfcyc/report.hpp"
#include "hopfcyc/scalar.hpp"
#include "hopfcyc/tensor.hpp"

namespace hopfcyc {

class InvalidLieAlgebra : public std::invalid_argument {
 public:
  explicit InvalidLieAlgebra(const std::string& what) : std::invalid_argument(what) {}
};

/// Exponent vector (a_1, ..., a_n) of the ordered monomial X_1^a_1 ... X_n^a_n.
using Monomial = std::vector<std::uint32_t>;
using UElement = LinComb<Monomial>;

/// [X_i, X_j] -> coef X_k.
struct BracketTerm {
  std::uint32_t i;
  std::uint32_t j;
  std::uint32_t k;
  Scalar coef;
};

/// Finite-dimensional Lie algebra by structure constants. Brackets may be
/// given for one order of each pair; the opposite order is filled in by
/// antisymmetry, and conflicting entries are rejected. Jacobi is checked
/// on construction.
class LieAlgebra {
 public:
  LieAlgebra(std::size_t dim, const std::vector<BracketTerm>& brackets,
             std::vector<std::string> labels = {});

  std::size_t dim() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  /// [X_i, X_j] as a combination of generator indices.
  const LinComb<std::uint32_t>& bracket(std::uint32_t i, std::uint32_t j) const {
    return brackets_[i * dim() + j];
  }
  /// Trace of ad X_i, i.e. sum_j c^j_{ij}.
  std::vector<Scalar> adjoint_trace() const;
  /// Whether a functional on generators vanishes on [g, g].
  bool is_character(const std::vector<Scalar>& values) const;

  /// The abelian algebra of the given dimension.
  static LieAlgebra abelian(std::size_t dim);
  /// Two generators X, Y with [X, Y] = Y.
  static LieAlgebra affine_line();

 private:
  std::vector<std::string> labels_;
  std::vector<LinComb<std::uint32_t>> brackets_;
};

/// The universal enveloping algebra U(g) in the PBW basis with primitive
/// generators. Products are straightened by rewriting X_j X_i (j > i) as
/// X_i X_j + [X_j, X_i]; results of monomial products are memoized.
class Enveloping {
 public:
  explicit Enveloping(LieAlgebra g);

  const LieAlgebra& lie() const { return *lie_; }
  std::size_t rank() const { return lie_->dim(); }

  Monomial one_monomial() const { return Monomial(rank(), 0); }
  UElement one() const { return {{one_monomial(), Scalar(1)}}; }
  UElement generator(std::uint32_t i) const;
  UElement monomial(const Monomial& m) const { return {{m, Scalar(1)}}; }

  UElement product(const Monomial& a, const Monomial& b) const;
  UElement multiply(const UElement& a, const UElement& b) const;
  /// Delta(X^a) = sum_k prod_i binom(a_i, k_i) X^k (x) X^(a-k).
  Tensor<Monomial> coproduct(const Monomial& a) const;
  Tensor<Monomial> coproduct(const UElement& a) const;
  Scalar counit(const Monomial& a) const;
  /// S(X^a) = (-1)^|a| X_n^a_n ... X_1^a_1, straightened.
  UElement antipode(const Monomial& a) const;
  UElement antipode(const UElement& a) const;

  std::string format(const Monomial& m) const;
  std::string format(const UElement& x) const;
  std::string format(const Tensor<Monomial>& t) const;

  /// All monomials of total degree <= max_degree, graded then lexicographic.
  std::vector<Monomial> monomials_up_to(unsigned max_degree) const;

 private:
  UElement right_multiply(const Monomial& m, std::uint32_t i) const;

  std::shared_ptr<const LieAlgebra> lie_;
  struct Cache {
    std::mutex mutex;
    std::map<std::pair<Monomial, std::uint32_t>, UElement> right;
  };
  std::shared_ptr<Cache> cache_;
};

std::uint32_t total_degree(const Monomial& m);

/// A character of U(g), determined by its values on the generators.
class LieCharacter {
 public:
  LieCharacter(const LieAlgebra& g, std::vector<Scalar> generator_values);
  /// delta(X_i) = tr(ad X_i).
  static LieCharacter modular(const LieAlgebra& g);
  static LieCharacter trivial(const LieAlgebra& g);

  const std::vector<Scalar>& generator_values() const { return values_; }
  Scalar operator()(const Monomial& m) const;
  Scalar operator()(const UElement& x) const;

 private:
  std::vector<Scalar> values_;
};

/// U(g) with a fixed character, exposed to the generic tensor operators.
class EnvelopingModel {
 public:
  using Key = Monomial;

  EnvelopingModel(Enveloping u, LieCharacter delta);

  const Enveloping& algebra() const { return u_; }
  const LieCharacter& character() const { return delta_; }

  UElement unit() const { return u_.one(); }
  UElement product(const Key& a, const Key& b) const { return u_.product(a, b); }
  Tensor<Key> coproduct(const Key& a) const { return u_.coproduct(a); }
  Scalar counit(const Key& a) const { return u_.counit(a); }
  UElement antipode(const Key& a) const { return u_.antipode(a); }
  /// S~(X^a) = sum delta(X^k) binom(a, k) S(X^(a-k)).
  UElement twisted_antipode(const Key& a) const;

 private:
  Enveloping u_;
  LieCharacter delta_;
};

UElement twisted_antipode(const EnvelopingModel& m, const UElement& x);

/// Coassociativity, counit, antipode convolution identity, S~ on
/// generators, and S~^2 = id on every monomial of degree <= max_degree.
CheckReport check_enveloping(const EnvelopingModel& m, unsigned max_degree);

/// Degree-n sample tensors: every tuple of monomials of total degree at most
/// `max_total_degree`, followed by `random_count` random combinations of
/// them with small integer coefficients.
std::vector<Tensor<Monomial>> sample_tensors(const Enveloping& u, unsigned n,
                                             unsigned max_total_degree, std::size_t random_count,
                                             std::mt19937_64& rng);

}  // namespace hopfcyc

#endif  // HOPFCYC_ENVELOPING_HPP
