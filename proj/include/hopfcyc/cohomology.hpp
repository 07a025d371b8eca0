#ifndef HOPFCYC_COHOMOLOGY_HPP
#define HOPFCYC_COHOMOLOGY_HPP

#include <optional>
#include <string>
#include <vector>

#include "hopfcyc/cyclic_module.hpp"
#include "hopfcyc/report.hpp"
#include "hopfcyc/sparse.hpp"

namespace hopfcyc {

/// b = sum_{i=0}^{n} (-1)^i delta_i : C^{n-1} -> C^n, n >= 1.
SparseMatrix hochschild_b(const CyclicModuleView& m, unsigned n);
/// lambda_n = (-1)^n tau_n on C^n.
SparseMatrix cyclic_sign(const CyclicModuleView& m, unsigned n);
/// N = sum_{i=0}^{n} lambda_n^i on C^n.
SparseMatrix cyclic_norm(const CyclicModuleView& m, unsigned n);
/// s_{-1} = sigma_n tau_{n+1} : C^{n+1} -> C^n.
SparseMatrix extra_degeneracy(const CyclicModuleView& m, unsigned n);
/// B = N s_{-1} (1 - lambda_{n+1}) : C^{n+1} -> C^n. Throws NotCyclic when
/// the module reports a cyclicity obstruction.
SparseMatrix cyclic_B(const CyclicModuleView& m, unsigned n);

/// b b = 0, B B = 0, b B + B b = 0 and im B inside ker(1 - lambda), up to
/// the given degree.
CheckReport mixed_complex_suite(const CyclicModuleView& m, unsigned max_degree);

enum class Method { Lambda, BB, Both };

std::string to_string(Method m);
Method parse_method(const std::string& text);

struct CohomologyOptions {
  unsigned max_degree = 4;
  Method method = Method::Both;
  /// Highest cochain degree entering the (b,B) total complex; 0 means
  /// max_degree + 2. Degrees above truncation - 2 are flagged.
  unsigned truncation = 0;
  EliminationOptions elimination;
};

struct DegreeRow {
  unsigned degree = 0;
  std::size_t dim = 0;
  std::size_t rank_b = 0;  // rank of b : C^{n-1} -> C^n
  std::size_t hh = 0;
  std::optional<std::size_t> lambda_dim;  // dim ker(1 - lambda_n)
  std::optional<std::size_t> hc_lambda;
  std::optional<std::size_t> total_dim;   // dim of the total complex in degree n
  std::optional<std::size_t> hc_bB;
  bool boundary_unreliable = false;
};

struct ComplexReport {
  std::string algebra;
  std::string character;
  CohomologyOptions options;
  unsigned truncation = 0;
  std::vector<DegreeRow> rows;
  std::size_t rank_b_top = 0;  // rank of b : C^N -> C^{N+1}
  bool euler_consistent = true;
  bool methods_agree = true;
  std::vector<unsigned> disagreements;

  std::vector<std::size_t> hh() const;
  std::vector<std::size_t> hc_lambda() const;
  std::vector<std::size_t> hc_bB() const;

  /// Stable "key: value" text.
  std::string to_text() const;
};

/// HH^n = dim C^n - rank b_{n+1} - rank b_n for n <= max_degree.
std::vector<std::size_t> hochschild_cohomology(const CyclicModuleView& m, unsigned max_degree,
                                               const EliminationOptions& options = {});

/// Hochschild and cyclic dimensions. Throws NotCyclic when the module
/// reports an obstruction.
ComplexReport compute_cohomology(const CyclicModuleView& m, const std::string& character,
                                 const CohomologyOptions& options);

}  // namespace hopfcyc

#endif  // HOPFCYC_COHOMOLOGY_HPP
