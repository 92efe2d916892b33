#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "howe/rational.hpp"

using namespace howe;

TEST_CASE("rational canonical form") {
  CHECK(Rational(BigInt(2), BigInt(4)) == Rational::of(1, 2));
  CHECK(Rational(BigInt(3), BigInt(-6)) == Rational::of(-1, 2));
  CHECK(Rational(BigInt(-3), BigInt(-6)) == Rational::of(1, 2));
  CHECK(Rational(BigInt(0), BigInt(-7)).str() == "0/1");
  CHECK(Rational::of(-4, 2).denominator() == 1);
  CHECK(Rational::of(-4, 2).numerator() == -2);
}

TEST_CASE("rational arithmetic") {
  CHECK(Rational::of(1, 2) + Rational::of(1, 3) == Rational::of(5, 6));
  CHECK(Rational::of(2, 3) * Rational::of(3, 4) == Rational::of(1, 2));
  CHECK(Rational::of(1, 2) / Rational::of(1, 4) == Rational(2));
  CHECK(Rational::of(1, 2) - Rational::of(1, 2) == Rational(0));
  CHECK(-Rational::of(3, 7) == Rational::of(-3, 7));
  CHECK(Rational::of(1, 3) < Rational::of(1, 2));
  CHECK(Rational::of(-2, 3) < Rational::of(1, 2));
  CHECK(Rational::of(7, 5).sign() == 1);
  CHECK(Rational::of(-7, 5).sign() == -1);
  CHECK(Rational(0).sign() == 0);
}

TEST_CASE("rational inverse and division errors") {
  CHECK(Rational::of(3, 4).inv() == Rational::of(4, 3));
  CHECK(Rational::of(-3, 4).inv() == Rational::of(-4, 3));
  CHECK_THROWS_AS(Rational(0).inv(), std::domain_error);
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
  CHECK_THROWS_AS(Rational(BigInt(1), BigInt(0)), std::domain_error);
}

TEST_CASE("rational rendering and parsing") {
  CHECK(Rational::of(-3, 4).str() == "-3/4");
  CHECK(Rational(5).str() == "5/1");
  CHECK(Rational::parse("-3/4") == Rational::of(-3, 4));
  CHECK(Rational::parse("5") == Rational(5));
  CHECK(Rational::parse("6/4") == Rational::of(3, 2));
  CHECK(Rational::parse(Rational::of(22, 7).str()) == Rational::of(22, 7));
}

TEST_CASE("gaussian rational arithmetic") {
  const GaussianRational i = GaussianRational::i();
  CHECK(i * i == GaussianRational(-1));
  // (1 + 2i)(3 - i) = 3 - i + 6i + 2 = 5 + 5i
  CHECK(GaussianRational(Rational(1), Rational(2)) * GaussianRational(Rational(3), Rational(-1)) ==
        GaussianRational(Rational(5), Rational(5)));
  CHECK(GaussianRational::of(1, 2, 1, 3) + GaussianRational::of(1, 2, -1, 3) ==
        GaussianRational(1));
  CHECK(GaussianRational(Rational(2), Rational(1)).conj() ==
        GaussianRational(Rational(2), Rational(-1)));
}

TEST_CASE("gaussian rational norm and inverse") {
  CHECK(GaussianRational::of(3, 5, 4, 5).norm2() == Rational(1));
  // (1 + i)^{-1} = (1 - i)/2
  CHECK(GaussianRational(Rational(1), Rational(1)).inv() == GaussianRational::of(1, 2, -1, 2));
  CHECK(GaussianRational(Rational(1), Rational(1)) /
            GaussianRational(Rational(1), Rational(1)) ==
        GaussianRational(1));
  CHECK_THROWS_AS(GaussianRational().inv(), std::domain_error);
}

TEST_CASE("gaussian rational rendering and parsing") {
  CHECK(GaussianRational::of(1, 2, -3, 4).str() == "1/2 + -3/4*i");
  CHECK(GaussianRational::parse("1/2 + -3/4*i") == GaussianRational::of(1, 2, -3, 4));
  const GaussianRational g = GaussianRational::of(-7, 3, 22, 5);
  CHECK(GaussianRational::parse(g.str()) == g);
}
