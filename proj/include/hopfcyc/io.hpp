#ifndef HOPFCYC_IO_HPP
#define HOPFCYC_IO_HPP

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "hopfcyc/actions.hpp"
#include "hopfcyc/enveloping.hpp"
#include "hopfcyc/finite_hopf.hpp"

namespace hopfcyc::io {

/// JSON text of the whole file; throws ParseError if unreadable or malformed.
std::string read_file(const std::filesystem::path& path);

enum class InputKind { Hopf, Lie };

/// A Lie algebra together with its chosen character.
struct LieInput {
  LieAlgebra algebra;
  LieCharacter character;
  std::string name;
};

/// Hopf presentation fields: name, field, basis (or dim), unit, product,
/// coproduct, counit, antipode, characters. Scalars are strings ("-1/2",
/// "z^2 + 1") or integers; omitted entries are zero.
FiniteHopf parse_hopf(const std::string& text);
FiniteHopf load_hopf(const std::filesystem::path& path);
std::string hopf_to_json(const FiniteHopf& h);

/// Lie fields: name, dim, labels, brackets ([i, j, k, c]: [X_i, X_j] gains
/// c X_k), and character ("adjoint", "trivial" or a list of values on the
/// generators; default "adjoint").
LieInput parse_lie(const std::string& text);

/// Whether a presentation file holds a Lie algebra (has "brackets").
InputKind detect_kind(const std::string& text);

FiniteAlgebra parse_algebra(const std::string& text);

/// Action, trace and Hopf algebra for the characteristic map.
/// Fields: hopf (object, or path relative to the file), algebra (object),
/// action (one entry list [row, col, c] per Hopf basis element, or
/// "translation" / "trivial"), trace (scalar list, or "sum"), character.
struct GammaInput {
  FiniteHopf hopf;
  FiniteAlgebra algebra;
  HopfAction action;
  Trace trace;
  std::optional<std::string> character;
};
GammaInput load_gamma(const std::filesystem::path& path);

/// Cochain, idempotent and units for the pairing.
/// Fields: algebra, cochain ({degree, trace: scalars} meaning
/// tau(a0 ... an), or {degree, entries: [[i0, .., in, c], ...]}),
/// idempotent ({q, entries: q*q coefficient lists, row-major}),
/// units ([{element, inverse}]), conjugations (default 20).
struct PairInput {
  explicit PairInput(FiniteAlgebra a) : algebra(std::move(a)) {}

  FiniteAlgebra algebra;
  unsigned degree = 0;
  std::vector<std::vector<BasisIndex>> cochain_support;
  std::vector<Scalar> cochain_values;
  std::optional<Trace> trace;
  MatrixOverAlgebra idempotent;
  std::vector<std::pair<Element, Element>> units;
  std::size_t conjugations = 20;

  Cochain cochain(const AlgebraCochainModule& am) const;
};
PairInput load_pair(const std::filesystem::path& path);

}  // namespace hopfcyc::io

#endif  // HOPFCYC_IO_HPP
