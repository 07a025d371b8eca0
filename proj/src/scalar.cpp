#include "hopfcyc/scalar.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <mutex>
#include <ostream>
#include <sstream>

namespace hopfcyc {

namespace {

using Poly = std::vector<mpq_class>;

void trim(Poly& p) {
  while (!p.empty() && sgn(p.back()) == 0) {
    p.pop_back();
  }
}

// Reduces p modulo the monic polynomial m in place.
void reduce_mod(Poly& p, const std::vector<mpz_class>& m) {
  std::size_t const deg = m.size() - 1;
  for (std::size_t k = p.size(); k-- > deg;) {
    if (sgn(p[k]) == 0) {
      continue;
    }
    mpq_class const c = p[k];
    for (std::size_t j = 0; j <= deg; ++j) {
      p[k - deg + j] -= c * m[j];
    }
  }
  p.resize(deg);
}

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) {
    return {};
  }
  Poly out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0) {
      continue;
    }
    for (std::size_t j = 0; j < b.size(); ++j) {
      out[i + j] += a[i] * b[j];
    }
  }
  return out;
}

// Division with remainder over Q; b must be nonzero after trimming.
void poly_divmod(Poly a, const Poly& b, Poly& quot, Poly& rem) {
  trim(a);
  quot.assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, 0);
  mpq_class const lead = b.back();
  while (a.size() >= b.size() && !a.empty()) {
    std::size_t const shift = a.size() - b.size();
    mpq_class const c = a.back() / lead;
    quot[shift] = c;
    for (std::size_t j = 0; j < b.size(); ++j) {
      a[shift + j] -= c * b[j];
    }
    trim(a);
  }
  rem = std::move(a);
}

Poly poly_sub(const Poly& a, const Poly& b) {
  Poly out(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
  trim(out);
  return out;
}

}  // namespace

std::string FieldSpec::describe() const {
  if (order == 1) {
    return "rational";
  }
  return "cyclotomic(" + std::to_string(order) + ")";
}

unsigned euler_phi(unsigned m) {
  unsigned result = m;
  unsigned n = m;
  for (unsigned p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) {
    result -= result / n;
  }
  return result;
}

const std::vector<mpz_class>& cyclotomic_polynomial(unsigned m) {
  static std::mutex mutex;
  static std::map<unsigned, std::vector<mpz_class>> cache;
  if (m == 0) {
    throw std::invalid_argument("cyclotomic order must be positive");
  }
  {
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(m);
    if (it != cache.end()) {
      return it->second;
    }
  }
  // x^m - 1 divided by Phi_d for every proper divisor d.
  std::vector<mpz_class> num(m + 1, 0);
  num[0] = -1;
  num[m] = 1;
  for (unsigned d = 1; d < m; ++d) {
    if (m % d != 0) {
      continue;
    }
    const auto& den = cyclotomic_polynomial(d);
    std::size_t const dd = den.size() - 1;
    std::vector<mpz_class> quot(num.size() - dd, 0);
    for (std::size_t k = num.size(); k-- > dd;) {
      mpz_class const c = num[k];
      quot[k - dd] = c;
      for (std::size_t j = 0; j <= dd; ++j) {
        num[k - dd + j] -= c * den[j];
      }
    }
    num = std::move(quot);
  }
  std::lock_guard<std::mutex> lock(mutex);
  return cache.emplace(m, std::move(num)).first->second;
}

Scalar Scalar::rational(long num, long den) {
  if (den == 0) {
    throw DivisionByZero();
  }
  mpq_class q(num, den);
  q.canonicalize();
  return Scalar(q);
}

Scalar Scalar::zeta(unsigned order, long power) {
  if (order == 0) {
    throw std::invalid_argument("cyclotomic order must be positive");
  }
  long const e = ((power % static_cast<long>(order)) + order) % order;
  Poly p(static_cast<std::size_t>(e) + 1, 0);
  p[e] = 1;
  return from_polynomial(order, std::move(p));
}

Scalar Scalar::from_polynomial(unsigned order, std::vector<mpq_class> coeffs) {
  if (order == 0) {
    throw std::invalid_argument("cyclotomic order must be positive");
  }
  Scalar s;
  if (order == 1) {
    for (const auto& c : coeffs) s.value_ += c;
    s.value_.canonicalize();
    return s;
  }
  const auto& phi = cyclotomic_polynomial(order);
  reduce_mod(coeffs, phi);
  s.order_ = order;
  s.poly_ = std::move(coeffs);
  s.canonicalize_poly();
  return s;
}

void Scalar::canonicalize_poly() {
  if (order_ == 1) {
    return;
  }
  for (auto& c : poly_) c.canonicalize();
  bool const rational = std::all_of(poly_.begin() + 1, poly_.end(),
                                    [](const mpq_class& c) { return sgn(c) == 0; });
  if (rational) {
    value_ = poly_.empty() ? mpq_class(0) : poly_[0];
    poly_.clear();
    order_ = 1;
  }
}

const mpq_class& Scalar::rational_value() const {
  if (order_ != 1) {
    throw std::logic_error("scalar " + to_string() + " is not rational");
  }
  return value_;
}

std::vector<mpq_class> Scalar::coefficients(unsigned order) const {
  if (order_ != 1 && order_ != order) {
    throw FieldMismatch("scalar lives in Q(zeta_" + std::to_string(order_) +
                        "), requested Q(zeta_" + std::to_string(order) + ")");
  }
  if (order_ != 1) {
    return poly_;
  }
  std::vector<mpq_class> out(order == 1 ? 1 : euler_phi(order), 0);
  out[0] = value_;
  return out;
}

unsigned Scalar::common_order(const Scalar& a, const Scalar& b) {
  if (a.order_ == 1) return b.order_;
  if (b.order_ == 1 || a.order_ == b.order_) return a.order_;
  throw FieldMismatch("mixed cyclotomic fields Q(zeta_" + std::to_string(a.order_) +
                      ") and Q(zeta_" + std::to_string(b.order_) + ")");
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
  unsigned const m = common_order(*this, rhs);
  if (m == 1) {
    value_ += rhs.value_;
    return *this;
  }
  auto lhs_c = coefficients(m);
  auto const rhs_c = rhs.coefficients(m);
  for (std::size_t i = 0; i < lhs_c.size(); ++i) lhs_c[i] += rhs_c[i];
  order_ = m;
  poly_ = std::move(lhs_c);
  canonicalize_poly();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) {
  if (common_order(*this, rhs) == 1) {
    value_ -= rhs.value_;
    return *this;
  }
  return *this += -rhs;
}

Scalar& Scalar::operator*=(const Scalar& rhs) {
  unsigned const m = common_order(*this, rhs);
  if (m == 1) {
    value_ *= rhs.value_;
    return *this;
  }
  if (order_ == 1 || rhs.order_ == 1) {
    mpq_class const k = order_ == 1 ? value_ : rhs.value_;
    std::vector<mpq_class> c = order_ == 1 ? rhs.poly_ : poly_;
    for (auto& x : c) x *= k;
    order_ = m;
    poly_ = std::move(c);
    canonicalize_poly();
    return *this;
  }
  auto prod = poly_mul(poly_, rhs.poly_);
  reduce_mod(prod, cyclotomic_polynomial(m));
  poly_ = std::move(prod);
  canonicalize_poly();
  return *this;
}

Scalar Scalar::operator-() const {
  Scalar out = *this;
  if (out.order_ == 1) {
    out.value_ = -out.value_;
  } else {
    for (auto& c : out.poly_) c = -c;
  }
  return out;
}

Scalar Scalar::inverse() const {
  if (is_zero()) {
    throw DivisionByZero();
  }
  if (order_ == 1) {
    return Scalar(mpq_class(1) / value_);
  }
  // Extended Euclid in Q[x]: find u with u*a = 1 mod Phi_m.
  const auto& phi_z = cyclotomic_polynomial(order_);
  Poly r0(phi_z.begin(), phi_z.end());
  Poly r1 = poly_;
  trim(r1);
  Poly s0;       // coefficient of a for r0
  Poly s1{1};    // coefficient of a for r1
  while (!r1.empty() && r1.size() > 1) {
    Poly q, r;
    poly_divmod(r0, r1, q, r);
    Poly s2 = poly_sub(s0, poly_mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (r1.empty()) {
    // Phi_m is irreducible, so a nonzero reduced element is always a unit.
    throw std::logic_error("cyclotomic inverse: non-coprime residue");
  }
  mpq_class const c = r1[0];
  for (auto& x : s1) x /= c;
  return from_polynomial(order_, std::move(s1));
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.order_ != b.order_) {
    return false;
  }
  if (a.order_ == 1) {
    return a.value_ == b.value_;
  }
  return a.poly_ == b.poly_;
}

namespace {

std::string rational_string(const mpq_class& q) { return q.get_str(); }

}  // namespace

std::string Scalar::to_string() const {
  if (order_ == 1) {
    return rational_string(value_);
  }
  std::string out;
  for (std::size_t k = 0; k < poly_.size(); ++k) {
    const mpq_class& c = poly_[k];
    if (sgn(c) == 0) {
      continue;
    }
    mpq_class const mag = abs(c);
    bool const neg = sgn(c) < 0;
    if (out.empty()) {
      out += neg ? "-" : "";
    } else {
      out += neg ? " - " : " + ";
    }
    if (k == 0) {
      out += rational_string(mag);
      continue;
    }
    if (mag != 1) {
      out += rational_string(mag) + "*";
    }
    out += "z";
    if (k > 1) {
      out += "^" + std::to_string(k);
    }
  }
  return out;
}

Scalar Scalar::parse(std::string_view text, unsigned order) {
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  }
  if (s.empty()) {
    throw ParseError("empty scalar");
  }
  auto parse_rational = [&](const std::string& tok) -> mpq_class {
    if (tok.empty()) {
      throw ParseError("malformed scalar '" + std::string(text) + "'");
    }
    for (char ch : tok) {
      if (!std::isdigit(static_cast<unsigned char>(ch)) && ch != '/') {
        throw ParseError("malformed scalar '" + std::string(text) + "'");
      }
    }
    auto slash = tok.find('/');
    if (slash != std::string::npos &&
        (slash == 0 || slash + 1 == tok.size() || tok.find('/', slash + 1) != std::string::npos)) {
      throw ParseError("malformed scalar '" + std::string(text) + "'");
    }
    mpq_class q;
    if (q.set_str(tok, 10) != 0) {
      throw ParseError("malformed scalar '" + std::string(text) + "'");
    }
    if (slash != std::string::npos && sgn(q.get_den()) == 0) {
      throw DivisionByZero();
    }
    q.canonicalize();
    return q;
  };

  std::map<unsigned, mpq_class> terms;
  std::size_t pos = 0;
  while (pos < s.size()) {
    bool neg = false;
    if (s[pos] == '+' || s[pos] == '-') {
      neg = s[pos] == '-';
      ++pos;
    } else if (pos != 0) {
      throw ParseError("malformed scalar '" + std::string(text) + "'");
    }
    std::size_t end = pos;
    while (end < s.size() && s[end] != '+' && s[end] != '-') ++end;
    std::string const tok = s.substr(pos, end - pos);
    pos = end;
    mpq_class coef = 1;
    unsigned power = 0;
    auto zpos = tok.find('z');
    if (zpos == std::string::npos) {
      coef = parse_rational(tok);
    } else {
      if (order == 1) {
        throw ParseError("polynomial scalar '" + std::string(text) + "' in a rational field");
      }
      if (zpos > 0) {
        if (tok[zpos - 1] != '*') {
          throw ParseError("malformed scalar '" + std::string(text) + "'");
        }
        coef = parse_rational(tok.substr(0, zpos - 1));
      }
      std::string const rest = tok.substr(zpos + 1);
      power = 1;
      if (!rest.empty()) {
        if (rest[0] != '^' || rest.size() == 1 ||
            !std::all_of(rest.begin() + 1, rest.end(),
                         [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); })) {
          throw ParseError("malformed scalar '" + std::string(text) + "'");
        }
        power = static_cast<unsigned>(std::stoul(rest.substr(1)));
      }
    }
    terms[power] += neg ? -coef : coef;
  }
  if (order == 1) {
    return Scalar(terms[0]);
  }
  std::vector<mpq_class> coeffs(terms.rbegin()->first + 1, 0);
  for (auto& [k, c] : terms) coeffs[k] = c;
  return from_polynomial(order, std::move(coeffs));
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

}  // namespace hopfcyc
