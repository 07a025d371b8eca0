#ifndef HOPFCYC_ACTIONS_HPP
#define HOPFCYC_ACTIONS_HPP

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "hopfcyc/algebra.hpp"
#include "hopfcyc/finite_hopf.hpp"
#include "hopfcyc/report.hpp"
#include "hopfcyc/sparse.hpp"

namespace hopfcyc {

/// A linear action of H on A: one dim(A) x dim(A) matrix per basis element
/// of H, column j holding h(e_j).
struct HopfAction {
  std::vector<SparseMatrix> matrices;

  Element apply(BasisIndex h, const Element& a) const;
  Element apply(const Element& h, const Element& a) const;

  /// h(a) = epsilon(h) a.
  static HopfAction trivial(const FiniteHopf& h, const FiniteAlgebra& a);
  /// k[G] acting on k^G by (g.f)(s) = f(sg), i.e. g.p_t = p_{t g^-1}.
  /// Both must come from the same Cayley table.
  static HopfAction translation(const std::vector<std::vector<BasisIndex>>& table);
};

/// Module axiom, 1_H acting as the identity, h(ab) = sum h_(1)(a) h_(2)(b)
/// and h(1) = epsilon(h) 1, on all basis tuples.
CheckReport check_action(const FiniteHopf& h, const FiniteAlgebra& a, const HopfAction& act);

/// A linear functional on A given by its values on the basis.
struct Trace {
  std::vector<Scalar> values;

  Scalar operator()(const Element& x) const;
};

/// tau(ab) = tau(ba) on basis pairs.
CheckReport check_trace(const FiniteAlgebra& a, const Trace& t);

/// tau(h(a) b) = tau(a S~(h)(b)) on all basis triples.
CheckReport check_delta_invariance(const FiniteHopf& h, const Character& delta,
                                   const FiniteAlgebra& a, const HopfAction& act, const Trace& t);

/// Sum of point masses on A = k^G: the trace f -> sum_s f(s).
Trace summation_trace(const FiniteAlgebra& a);
/// Coefficient of basis element `index`.
Trace coefficient_trace(const FiniteAlgebra& a, BasisIndex index);
/// Matrix trace on M_q(k) in the basis of FiniteAlgebra::matrices.
Trace matrix_trace(unsigned q);

/// gamma(h^1 (x) ... (x) h^n)(x^0, ..., x^n) = tau(x^0 h^1(x^1) ... h^n(x^n))
/// as a matrix from H^{(x)n} to C^n(A), in the bases of HopfCyclicModule and
/// AlgebraCochainModule.
SparseMatrix characteristic_map(const HopfCyclicModule& hm, const AlgebraCochainModule& am,
                                const HopfAction& act, const Trace& t, unsigned n);
/// The cochain gamma(t) for a single tensor t of degree n.
SparseVector characteristic_cochain(const HopfCyclicModule& hm, const AlgebraCochainModule& am,
                                    const HopfAction& act, const Trace& t, unsigned n,
                                    const SparseVector& tensor);

/// gamma o op = op o gamma for every face, degeneracy and cyclic operator
/// with objects in [0, max_degree]. Runs whether or not the trace is
/// delta-invariant, so that failures are reported with witnesses.
CheckReport check_gamma_morphism(const HopfCyclicModule& hm, const AlgebraCochainModule& am,
                                 const HopfAction& act, const Trace& t, unsigned max_degree);

/// A 2-cochain given by phi(e_i, e_j, e_k) for every basis triple.
struct Cochain {
  unsigned degree = 0;
  SparseVector values;  // indexed like AlgebraCochainModule::encode
};

/// Cochain from a functional of the arguments.
template <class F>
Cochain make_cochain(const AlgebraCochainModule& am, unsigned degree, F&& value_of) {
  std::vector<SparseVector::Entry> e;
  for (std::size_t k = 0; k < am.dim(degree); ++k) {
    Scalar v = value_of(am.decode(degree, k));
    if (!v.is_zero()) e.emplace_back(k, std::move(v));
  }
  return {degree, SparseVector::from_entries(std::move(e))};
}

/// phi(a0, .., an) for arbitrary elements, by multilinearity.
Scalar evaluate(const AlgebraCochainModule& am, const Cochain& phi,
                const std::vector<Element>& args);

/// Degree 2: phi(a1, a2, a0) = phi(a0, a1, a2) on basis triples and the
/// four-term identity on basis quadruples. Other degrees: lambda phi = phi
/// and b phi = 0.
CheckReport check_cyclic_cocycle(const AlgebraCochainModule& am, const Cochain& phi);

/// Idempotent E in M_q(A), entries row-major.
struct MatrixOverAlgebra {
  unsigned q = 0;
  std::vector<Element> entries;

  const Element& at(unsigned i, unsigned j) const { return entries[i * q + j]; }
  Element& at(unsigned i, unsigned j) { return entries[i * q + j]; }
};

class NotIdempotent : public std::invalid_argument {
 public:
  explicit NotIdempotent(const std::string& what) : std::invalid_argument(what) {}
};

MatrixOverAlgebra matrix_multiply(const FiniteAlgebra& a, const MatrixOverAlgebra& x,
                                  const MatrixOverAlgebra& y);

/// Pairing with a cochain of degree 0 (sum_i phi(E_ii)) or degree 2
/// (sum_{ijk} phi(E_ij, E_jk, E_ki)). Throws NotIdempotent unless E^2 = E.
Scalar pair_idempotent(const AlgebraCochainModule& am, const Cochain& phi,
                       const MatrixOverAlgebra& e);

/// A random invertible u in M_q(A) with its inverse: a product of
/// elementary matrices 1 + a e_ij (i != j) and diagonal matrices whose
/// entries are nonzero rationals times the given invertible elements.
std::pair<MatrixOverAlgebra, MatrixOverAlgebra> random_invertible(
    const FiniteAlgebra& a, unsigned q, const std::vector<std::pair<Element, Element>>& units,
    std::mt19937_64& rng, unsigned steps = 6);

struct SimilarityResult {
  Scalar base;
  std::vector<Scalar> values;
  bool invariant = true;
};

/// <u E u^-1, phi> for `count` random u.
SimilarityResult similarity_invariance(const AlgebraCochainModule& am, const Cochain& phi,
                                       const MatrixOverAlgebra& e,
                                       const std::vector<std::pair<Element, Element>>& units,
                                       std::size_t count, std::uint64_t seed);

}  // namespace hopfcyc

#endif  // HOPFCYC_ACTIONS_HPP
