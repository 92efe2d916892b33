#include "howe/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace howe {

namespace {

BigInt gcd_positive(BigInt a, BigInt b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  return boost::multiprecision::gcd(a, b);
}

}  // namespace

Rational::Rational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) {
  if (den_ == 0) throw std::domain_error("Rational: zero denominator");
  reduce();
}

void Rational::reduce() {
  if (num_ == 0) {
    den_ = 1;
    return;
  }
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  if (den_ == 1) return;
  BigInt g = gcd_positive(num_, den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
}

Rational Rational::operator-() const {
  Rational r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

Rational& Rational::operator+=(const Rational& o) {
  if (o.num_ == 0) return *this;
  if (num_ == 0) return *this = o;
  if (den_ == o.den_) {
    num_ += o.num_;
  } else {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
  }
  reduce();
  return *this;
}

Rational& Rational::operator-=(const Rational& o) { return *this += -o; }

Rational& Rational::operator*=(const Rational& o) {
  if (num_ == 0) return *this;
  if (o.num_ == 0) {
    num_ = 0;
    den_ = 1;
    return *this;
  }
  num_ *= o.num_;
  den_ *= o.den_;
  reduce();
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.num_ == 0) throw std::domain_error("Rational: division by zero");
  num_ *= o.den_;
  den_ *= o.num_;
  reduce();
  return *this;
}

Rational Rational::inv() const {
  if (num_ == 0) throw std::domain_error("Rational: inverse of zero");
  return Rational(den_, num_);
}

std::string Rational::str() const { return num_.str() + "/" + den_.str(); }

Rational Rational::parse(std::string_view text) {
  auto bad = [&] { return std::invalid_argument("Rational: cannot parse '" + std::string(text) + "'"); };
  if (text.empty()) throw bad();
  std::size_t slash = text.find('/');
  try {
    if (slash == std::string_view::npos) {
      return Rational(BigInt(std::string(text)));
    }
    BigInt n(std::string(text.substr(0, slash)));
    BigInt d(std::string(text.substr(slash + 1)));
    if (d == 0) throw bad();
    return Rational(std::move(n), std::move(d));
  } catch (const std::runtime_error&) {
    throw bad();
  }
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
  re += o.re;
  im += o.im;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
  re -= o.re;
  im -= o.im;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  Rational new_re = re * o.re - im * o.im;
  im = re * o.im + im * o.re;
  re = std::move(new_re);
  return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) { return *this *= o.inv(); }

GaussianRational GaussianRational::inv() const {
  if (is_zero()) throw std::domain_error("GaussianRational: inverse of zero");
  Rational n2 = norm2();
  return {re / n2, -im / n2};
}

std::string GaussianRational::str() const { return re.str() + " + " + im.str() + "*i"; }

GaussianRational GaussianRational::parse(std::string_view text) {
  auto bad = [&] {
    return std::invalid_argument("GaussianRational: cannot parse '" + std::string(text) + "'");
  };
  std::size_t sep = text.find(" + ");
  if (sep == std::string_view::npos) throw bad();
  std::string_view re_part = text.substr(0, sep);
  std::string_view im_part = text.substr(sep + 3);
  if (im_part.size() < 2 || im_part.substr(im_part.size() - 2) != "*i") throw bad();
  im_part.remove_suffix(2);
  return {Rational::parse(re_part), Rational::parse(im_part)};
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& g) { return os << g.str(); }

}  // namespace howe
