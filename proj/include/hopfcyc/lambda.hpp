#ifndef HOPFCYC_LAMBDA_HPP
#define HOPFCYC_LAMBDA_HPP

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace hopfcyc {

class NotComposable : public std::invalid_argument {
 public:
  explicit NotComposable(const std::string& what) : std::invalid_argument(what) {}
};

/// A generator of the cyclic category. Objects are [n], n >= 0.
///
///   face(i, n)       : [n-1] -> [n],  0 <= i <= n, n >= 1
///   degeneracy(i, n) : [n+1] -> [n],  0 <= i <= n
///   cyclic(n)        : [n]   -> [n]
struct Generator {
  enum class Kind : std::uint8_t { Face, Degeneracy, Cyclic };

  Kind kind;
  unsigned index;
  unsigned degree;

  static Generator face(unsigned i, unsigned n);
  static Generator degeneracy(unsigned i, unsigned n);
  static Generator cyclic(unsigned n) { return {Kind::Cyclic, 0, n}; }

  unsigned source() const;
  unsigned target() const;
  std::string to_string() const;

  friend bool operator==(const Generator&, const Generator&) = default;
};

/// Composition word, written like function composition: the last
/// generator is applied first.
struct Word {
  unsigned source = 0;  // needed for the empty (identity) word
  std::vector<Generator> generators;

  unsigned target() const { return generators.empty() ? source : generators.front().target(); }
  /// Throws NotComposable unless adjacent generators match up.
  void validate() const;
  std::string to_string() const;
};

Word make_word(std::vector<Generator> generators);

/// A morphism [n] -> [m] of the cyclic category, stored as a nondecreasing
/// map f : Z -> Z with f(x + n + 1) = f(x) + m + 1, modulo translation by
/// multiples of m + 1. The stored representative satisfies 0 <= f(0) <= m.
class LambdaMorphism {
 public:
  static LambdaMorphism identity(unsigned object);
  static LambdaMorphism from_generator(const Generator& g);
  static LambdaMorphism from_word(const Word& w);
  /// Validates monotonicity and the period condition, then normalizes.
  static LambdaMorphism from_values(unsigned source, unsigned target, std::vector<long> values);

  unsigned source() const { return source_; }
  unsigned target() const { return target_; }
  const std::vector<long>& values() const { return values_; }
  /// f(x) for any integer x.
  long operator()(long x) const;

  /// Canonical factorization (faces) o (degeneracies) o tau^k; the k-th
  /// power of the cyclic generator is applied first.
  Word canonical_word() const;
  /// Exponent k of the cyclic part in canonical_word().
  unsigned cyclic_exponent() const;

  std::string to_string() const;
  friend bool operator==(const LambdaMorphism&, const LambdaMorphism&) = default;

 private:
  LambdaMorphism(unsigned s, unsigned t, std::vector<long> v);
  void normalize();

  unsigned source_ = 0;
  unsigned target_ = 0;
  std::vector<long> values_;
};

/// f o g. Throws NotComposable when g's target is not f's source.
LambdaMorphism compose(const LambdaMorphism& f, const LambdaMorphism& g);

/// One instance of a defining relation of the cyclic category.
struct Relation {
  std::string id;        // family, e.g. "tau_delta"
  std::string instance;  // indices, e.g. "n=3 i=2"
  unsigned degree;       // the n in the relation
  Word lhs;
  Word rhs;
};

/// Every simplicial identity and cyclic relation whose objects all lie in
/// [0, max_object]. Ordered by (degree, family, indices).
std::vector<Relation> relation_catalog(unsigned max_object);

/// Random composable word with every object in [0, max_object] and the
/// given target object.
Word random_word(std::mt19937_64& rng, unsigned target, unsigned max_object,
                 unsigned max_length);

}  // namespace hopfcyc

#endif  // HOPFCYC_LAMBDA_HPP
