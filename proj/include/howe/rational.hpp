#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <iosfwd>
#include <string>
#include <string_view>

namespace howe {

using BigInt = boost::multiprecision::cpp_int;

/**
 * Exact rational number over arbitrary-precision integers.
 *
 * Canonical form is maintained by every operation: gcd(num, den) == 1,
 * den > 0, and zero is stored as 0/1.  Division by zero and inversion of
 * zero throw std::domain_error; nothing ever wraps or rounds.
 */
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(long long n) : num_(n), den_(1) {}  // NOLINT: implicit by design
  Rational(BigInt n) : num_(std::move(n)), den_(1) {}
  Rational(BigInt n, BigInt d);

  static Rational of(long long n, long long d) { return Rational(BigInt(n), BigInt(d)); }

  const BigInt& numerator() const { return num_; }
  const BigInt& denominator() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_one() const { return num_ == 1 && den_ == 1; }
  int sign() const { return num_ == 0 ? 0 : (num_ > 0 ? 1 : -1); }

  Rational operator-() const;
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) {
    return a.num_ * b.den_ < b.num_ * a.den_;
  }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  /** Multiplicative inverse; throws std::domain_error on zero. */
  Rational inv() const;

  /** Canonical rendering "n/d", e.g. "-3/4", "0/1". */
  std::string str() const;

  /** Parses the canonical "n/d" form (also accepts a bare integer). */
  static Rational parse(std::string_view text);

 private:
  void reduce();

  BigInt num_;
  BigInt den_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/**
 * Element of Q(i), the Gaussian rationals: re + im * i with i^2 = -1.
 * The coefficient field for every symplectic-spinor computation here.
 */
struct GaussianRational {
  Rational re;
  Rational im;

  GaussianRational() = default;
  GaussianRational(Rational real) : re(std::move(real)) {}  // NOLINT
  GaussianRational(long long real) : re(real) {}            // NOLINT
  GaussianRational(Rational real, Rational imag) : re(std::move(real)), im(std::move(imag)) {}

  static GaussianRational i() { return {Rational(0), Rational(1)}; }
  static GaussianRational of(long long re_n, long long re_d, long long im_n, long long im_d) {
    return {Rational::of(re_n, re_d), Rational::of(im_n, im_d)};
  }

  bool is_zero() const { return re.is_zero() && im.is_zero(); }

  GaussianRational conj() const { return {re, -im}; }

  /** Squared modulus re^2 + im^2, a nonnegative Rational. */
  Rational norm2() const { return re * re + im * im; }

  GaussianRational operator-() const { return {-re, -im}; }
  GaussianRational& operator+=(const GaussianRational& o);
  GaussianRational& operator-=(const GaussianRational& o);
  GaussianRational& operator*=(const GaussianRational& o);
  GaussianRational& operator/=(const GaussianRational& o);

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

  /** Multiplicative inverse conj()/norm2(); throws std::domain_error on zero. */
  GaussianRational inv() const;

  /** Canonical rendering "a/b + c/d*i", e.g. "1/2 + -3/4*i". */
  std::string str() const;

  /** Parses the canonical "a/b + c/d*i" form. */
  static GaussianRational parse(std::string_view text);
};

std::ostream& operator<<(std::ostream& os, const GaussianRational& g);

}  // namespace howe
