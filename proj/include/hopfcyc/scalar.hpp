#ifndef HOPFCYC_SCALAR_HPP
#define HOPFCYC_SCALAR_HPP

#include <gmpxx.h>

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hopfcyc {

class DivisionByZero : public std::domain_error {
 public:
  DivisionByZero() : std::domain_error("division by zero") {}
};

class FieldMismatch : public std::invalid_argument {
 public:
  explicit FieldMismatch(const std::string& what) : std::invalid_argument(what) {}
};

class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// Ground field descriptor: order 1 is Q, order m > 1 is Q(zeta_m).
struct FieldSpec {
  unsigned order = 1;

  bool is_rational() const { return order == 1; }
  std::string describe() const;
  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

/// Euler phi.
unsigned euler_phi(unsigned m);

/// Integer coefficients of the m-th cyclotomic polynomial, constant term
/// first. Cached; safe to call concurrently.
const std::vector<mpz_class>& cyclotomic_polynomial(unsigned m);

/// An element of Q or of a cyclotomic field Q(zeta_m).
///
/// Canonical form: a value whose non-constant coefficients all vanish is
/// stored as a plain rational, so every rational has exactly one
/// representation regardless of the field it was computed in. Genuinely
/// irrational values carry their order m and phi(m) coefficients reduced
/// modulo the m-th cyclotomic polynomial.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Scalar(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }  // NOLINT

  static Scalar rational(long num, long den);
  /// zeta_m^power.
  static Scalar zeta(unsigned order, long power = 1);
  /// c0 + c1*z + ... in Q(zeta_m); any polynomial degree, reduced on entry.
  static Scalar from_polynomial(unsigned order, std::vector<mpq_class> coeffs);

  /// Parses "p", "p/q", or a polynomial in z such as "1/2 - 3*z + z^2".
  /// Polynomial strings require order > 1.
  static Scalar parse(std::string_view text, unsigned order = 1);

  bool is_zero() const { return order_ == 1 && sgn(value_) == 0; }
  bool is_one() const { return order_ == 1 && value_ == 1; }
  bool is_rational() const { return order_ == 1; }
  /// 1 for rationals, m for irrational elements of Q(zeta_m).
  unsigned order() const { return order_; }

  /// Throws std::logic_error if the value is not rational.
  const mpq_class& rational_value() const;
  /// Coefficients in Q(zeta_order) for the requested order (phi(order) of them).
  std::vector<mpq_class> coefficients(unsigned order) const;

  Scalar inverse() const;

  Scalar& operator+=(const Scalar& rhs);
  Scalar& operator-=(const Scalar& rhs);
  Scalar& operator*=(const Scalar& rhs);
  Scalar& operator/=(const Scalar& rhs) { return *this *= rhs.inverse(); }

  friend Scalar operator+(Scalar lhs, const Scalar& rhs) { return lhs += rhs; }
  friend Scalar operator-(Scalar lhs, const Scalar& rhs) { return lhs -= rhs; }
  friend Scalar operator*(Scalar lhs, const Scalar& rhs) { return lhs *= rhs; }
  friend Scalar operator/(Scalar lhs, const Scalar& rhs) { return lhs /= rhs; }
  Scalar operator-() const;

  friend bool operator==(const Scalar& a, const Scalar& b);

  /// "p/q" or "p" for rationals, "c0 + c1*z + ..." otherwise (zero terms omitted).
  std::string to_string() const;

 private:
  void canonicalize_poly();
  static unsigned common_order(const Scalar& a, const Scalar& b);

  unsigned order_ = 1;
  mpq_class value_;                // rational representation (order_ == 1)
  std::vector<mpq_class> poly_;    // size phi(order_) when order_ > 1
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace hopfcyc

#endif  // HOPFCYC_SCALAR_HPP
