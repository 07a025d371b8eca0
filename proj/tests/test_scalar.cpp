#include <random>

#include "doctest.h"
#include "hopfcyc/scalar.hpp"

using hopfcyc::FieldMismatch;
using hopfcyc::Scalar;

TEST_CASE("rational arithmetic") {
  CHECK(Scalar::rational(1, 2) + Scalar::rational(1, 3) == Scalar::rational(5, 6));
  CHECK(Scalar::rational(-2, 7).inverse() == Scalar::rational(-7, 2));
  CHECK(Scalar::rational(4, -6).to_string() == "-2/3");
  CHECK(Scalar(3).to_string() == "3");
  CHECK_THROWS_AS(Scalar().inverse(), hopfcyc::DivisionByZero);
}

TEST_CASE("cyclotomic arithmetic") {
  Scalar const i = Scalar::zeta(4);
  CHECK(i * i == Scalar(-1));
  CHECK((i * i).is_rational());
  Scalar const w = Scalar::zeta(3);
  CHECK(w * w * w == Scalar(1));
  CHECK(Scalar(1) + w + w * w == Scalar(0));
  CHECK(w.to_string() == "z");
  CHECK((w * w).to_string() == "-1 - z");
  CHECK(Scalar::zeta(3, -1) == w * w);
  CHECK_THROWS_AS(Scalar::zeta(3) + Scalar::zeta(4), FieldMismatch);
  CHECK(Scalar::zeta(3) + Scalar(2) == Scalar::parse("2 + z", 3));
}

TEST_CASE("cyclotomic polynomials") {
  CHECK(hopfcyc::cyclotomic_polynomial(4) ==
        std::vector<mpz_class>{1, 0, 1});
  CHECK(hopfcyc::cyclotomic_polynomial(6) == std::vector<mpz_class>{1, -1, 1});
  CHECK(hopfcyc::euler_phi(12) == 4);
  CHECK(hopfcyc::cyclotomic_polynomial(12).size() == 5);
}

TEST_CASE("parse round trip") {
  for (const char* text : {"0", "5", "-3/4", "1/2 - 3*z + z^2", "-z^3", "z - 1"}) {
    Scalar const s = Scalar::parse(text, 12);
    CHECK(Scalar::parse(s.to_string(), 12) == s);
  }
  CHECK_THROWS_AS(Scalar::parse("1/0"), hopfcyc::DivisionByZero);
  CHECK_THROWS_AS(Scalar::parse("abc"), hopfcyc::ParseError);
  CHECK_THROWS_AS(Scalar::parse("z"), hopfcyc::ParseError);
}

TEST_CASE("a * inverse(a) = 1 on random cyclotomics") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> coef(-5, 5);
  for (unsigned m : {1U, 3U, 4U, 5U, 8U, 12U}) {
    for (int trial = 0; trial < 30; ++trial) {
      std::vector<mpq_class> c(hopfcyc::euler_phi(m));
      for (auto& x : c) x = mpq_class(coef(rng), 1 + std::abs(coef(rng)));
      Scalar const a = Scalar::from_polynomial(m, c);
      if (a.is_zero()) continue;
      CHECK(a * a.inverse() == Scalar(1));
      CHECK((a - a).is_zero());
    }
  }
}
