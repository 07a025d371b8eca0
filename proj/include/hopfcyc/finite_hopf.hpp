#ifndef HOPFCYC_FINITE_HOPF_HPP
#define HOPFCYC_FINITE_HOPF_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hopfcyc/report.hpp"
#include "hopfcyc/scalar.hpp"
#include "hopfcyc/sparse.hpp"
#include "hopfcyc/tensor.hpp"

namespace hopfcyc {

using BasisIndex = std::uint32_t;
/// Element of a finite-dimensional algebra, indexed by basis position.
using Element = LinComb<BasisIndex>;

class InvalidCharacter : public std::invalid_argument {
 public:
  explicit InvalidCharacter(const std::string& what) : std::invalid_argument(what) {}
};

/// Structure constant c for m(e_i, e_j) -> c e_k or Delta(e_i) -> c e_j (x) e_k.
struct StructureTerm {
  BasisIndex a;
  BasisIndex b;
  BasisIndex c;
  Scalar coef;
};

struct LinearTerm {
  BasisIndex from;
  BasisIndex to;
  Scalar coef;
};

class FiniteHopf;

/// An algebra homomorphism H -> k, validated against the product on
/// construction.
class Character {
 public:
  Character(const FiniteHopf& h, std::vector<Scalar> values);

  const std::vector<Scalar>& values() const { return values_; }
  const Scalar& operator()(BasisIndex i) const { return values_.at(i); }
  Scalar operator()(const Element& x) const;

  friend bool operator==(const Character&, const Character&) = default;

 private:
  std::vector<Scalar> values_;
};

/// Finite-dimensional Hopf algebra given by structure constants.
///
/// The object is immutable after construction. Axioms are not enforced by
/// the constructor; run check_hopf_axioms on untrusted presentations.
class FiniteHopf {
 public:
  struct Presentation {
    std::string name;
    FieldSpec field;
    std::vector<std::string> basis;
    std::vector<Scalar> unit;
    std::vector<StructureTerm> product;
    std::vector<StructureTerm> coproduct;
    std::vector<Scalar> counit;
    std::vector<LinearTerm> antipode;
    std::map<std::string, std::vector<Scalar>> characters;
  };

  explicit FiniteHopf(Presentation p);

  const std::string& name() const { return name_; }
  const FieldSpec& field() const { return field_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<std::string>& basis_labels() const { return basis_; }

  const Element& unit() const { return unit_; }
  const Element& product(BasisIndex i, BasisIndex j) const { return product_[i * dim() + j]; }
  const Tensor<BasisIndex>& coproduct(BasisIndex i) const { return coproduct_[i]; }
  const Scalar& counit(BasisIndex i) const { return counit_[i]; }
  const Element& antipode(BasisIndex i) const { return antipode_[i]; }

  Element multiply(const Element& a, const Element& b) const;
  Tensor<BasisIndex> coproduct(const Element& a) const;
  Scalar counit(const Element& a) const;
  Element antipode(const Element& a) const;

  /// The counit viewed as a character; always present as "epsilon".
  Character counit_character() const;
  /// Named characters from the presentation plus "epsilon".
  std::vector<std::string> character_names() const;
  /// Throws std::out_of_range for unknown names.
  Character character(const std::string& name) const;

  const Presentation& presentation() const { return presentation_; }

  std::string label(BasisIndex i) const { return basis_.at(i); }
  std::string format(const Element& x) const;
  std::string format(const Tensor<BasisIndex>& t) const;
  std::string format_tuple(const std::vector<BasisIndex>& tuple) const;

  /// Element built from a dense coefficient vector.
  static Element from_coefficients(const std::vector<Scalar>& v);
  Element basis_element(BasisIndex i) const { return {{i, Scalar(1)}}; }

 private:
  Presentation presentation_;
  std::string name_;
  FieldSpec field_;
  std::vector<std::string> basis_;
  Element unit_;
  std::vector<Element> product_;
  std::vector<Tensor<BasisIndex>> coproduct_;
  std::vector<Scalar> counit_;
  std::vector<Element> antipode_;
};

/// Adapter exposing a FiniteHopf with a fixed character to the generic
/// tensor operators. Twisted antipodes are precomputed per basis element.
class FiniteHopfModel {
 public:
  using Key = BasisIndex;

  FiniteHopfModel(FiniteHopf h, Character delta);

  const FiniteHopf& hopf() const { return hopf_; }
  const Character& character() const { return delta_; }

  const Element& unit() const { return hopf_.unit(); }
  const Element& product(Key a, Key b) const { return hopf_.product(a, b); }
  const Tensor<Key>& coproduct(Key a) const { return hopf_.coproduct(a); }
  const Scalar& counit(Key a) const { return hopf_.counit(a); }
  const Element& antipode(Key a) const { return hopf_.antipode(a); }
  const Element& twisted_antipode(Key a) const { return twisted_[a]; }

 private:
  FiniteHopf hopf_;
  Character delta_;
  std::vector<Element> twisted_;
};

/// S~(h) = sum delta(h_(1)) S(h_(2)).
Element twisted_antipode(const FiniteHopf& h, const Character& delta, const Element& x);
/// sigma(h) = sum delta(h_(1)) h_(2).
Element twist_automorphism(const FiniteHopf& h, const Character& delta, const Element& x);

/// Matrix of a linear endomorphism given on basis elements.
template <class F>
SparseMatrix basis_matrix(std::size_t dim, F&& image_of) {
  std::vector<SparseVector> cols(dim);
  for (BasisIndex i = 0; i < dim; ++i) {
    std::vector<SparseVector::Entry> e;
    for (const auto& [k, c] : Element(image_of(i))) e.emplace_back(k, c);
    cols[i] = SparseVector::from_entries(std::move(e));
  }
  return {dim, std::move(cols)};
}

SparseMatrix antipode_matrix(const FiniteHopf& h);
SparseMatrix twisted_antipode_matrix(const FiniteHopf& h, const Character& delta);
SparseMatrix twist_automorphism_matrix(const FiniteHopf& h, const Character& delta);

/// Associativity, unit, coassociativity, counit, multiplicativity of Delta
/// and epsilon, and the antipode identity, on all basis tuples.
CheckReport check_hopf_axioms(const FiniteHopf& h);
/// Antihomomorphism and S~(1) = 1, twisted coalgebra antimorphism, and
/// epsilon o S~ = delta.
CheckReport check_twisted_properties(const FiniteHopf& h, const Character& delta);

struct InvolutionResult {
  bool holds = true;
  std::optional<BasisIndex> witness;
  std::string detail;
};

/// Whether S~ o S~ is the identity.
InvolutionResult check_involution(const FiniteHopf& h, const Character& delta);

/// Candidate characters drawn uniformly from `pool` per basis element,
/// keeping only the valid ones. Returns up to `count` characters (repeats
/// allowed) after at most `max_trials` candidates.
std::vector<Character> random_characters(const FiniteHopf& h, const std::vector<Scalar>& pool,
                                         std::size_t count, std::uint64_t seed,
                                         std::size_t max_trials = 200000);

namespace builders {

/// k[G] for a group given by its Cayley table (table[a][b] = index of ab,
/// element 0 the identity). Group-like coproduct, S = inverse.
FiniteHopf group_algebra(const std::string& name, const std::vector<std::vector<BasisIndex>>& table,
                         FieldSpec field = {}, std::vector<std::string> labels = {});
/// k[Z/n]; over Q(zeta_n) the characters chi_k(g) = zeta^k are included.
FiniteHopf cyclic_group_algebra(unsigned n, FieldSpec field = {});
/// k^G, the dual of k[G]: point-mass basis, pointwise product. The
/// evaluation characters are named "ev_<label>".
FiniteHopf function_algebra(const std::string& name,
                            const std::vector<std::vector<BasisIndex>>& table,
                            std::vector<std::string> labels = {});
/// Sweedler's four-dimensional algebra over Q, basis 1, g, x, gx, with
/// characters "delta" (delta(g) = -1) and "epsilon".
FiniteHopf sweedler();
/// The one-dimensional Hopf algebra k.
FiniteHopf trivial();

std::vector<std::vector<BasisIndex>> cyclic_group_table(unsigned n);

}  // namespace builders

}  // namespace hopfcyc

#endif  // HOPFCYC_FINITE_HOPF_HPP
