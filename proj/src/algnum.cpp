#include "klc/algnum.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace klc {

namespace {

int rational_sign(const Rational& r) {
  if (r > 0) return 1;
  if (r < 0) return -1;
  return 0;
}

std::int64_t common_radicand(const QuadNum& x, const QuadNum& y) {
  if (x.is_rational()) return y.radicand();
  if (y.is_rational() || x.radicand() == y.radicand()) return x.radicand();
  throw std::domain_error("QuadNum: incompatible quadratic fields sqrt(" +
                          std::to_string(x.radicand()) + ") and sqrt(" +
                          std::to_string(y.radicand()) + ")");
}

double rational_to_double(const Rational& r) {
  return boost::multiprecision::numerator(r).convert_to<double>() /
         boost::multiprecision::denominator(r).convert_to<double>();
}

}  // namespace

QuadNum::QuadNum(std::int64_t value) : a_(value) {}

QuadNum::QuadNum(Rational value) : a_(std::move(value)) {}

QuadNum::QuadNum(Rational a, Rational b, std::int64_t d)
    : a_(std::move(a)), b_(std::move(b)), d_(d) {
  if (d_ < 1) throw std::domain_error("QuadNum: radicand must be positive");
  normalize();
}

void QuadNum::normalize() {
  if (b_ == 0) {
    d_ = 1;
    return;
  }
  auto [f, d] = split_square_free(BigInt(d_));
  if (d == 1) {
    a_ += b_ * Rational(f);
    b_ = 0;
    d_ = 1;
    return;
  }
  b_ *= Rational(f);
  d_ = d.convert_to<std::int64_t>();
}

bool QuadNum::is_integer() const {
  return b_ == 0 && boost::multiprecision::denominator(a_) == 1;
}

QuadNum QuadNum::conjugate() const { return QuadNum(a_, -b_, d_); }

QuadNum QuadNum::inverse() const {
  if (is_zero()) throw std::domain_error("QuadNum: division by zero");
  // (a + b r)^-1 = (a - b r) / (a^2 - b^2 d); the norm is non-zero since d is
  // square-free and not 1.
  Rational norm = a_ * a_ - b_ * b_ * Rational(d_);
  return QuadNum(a_ / norm, -b_ / norm, d_);
}

int QuadNum::sign() const {
  int sa = rational_sign(a_);
  int sb = rational_sign(b_);
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  Rational a2 = a_ * a_;
  Rational b2d = b_ * b_ * Rational(d_);
  if (a2 > b2d) return sa;
  if (a2 < b2d) return sb;
  return 0;
}

double QuadNum::to_double() const {
  return rational_to_double(a_) + rational_to_double(b_) * std::sqrt(static_cast<double>(d_));
}

std::string QuadNum::to_string() const {
  if (b_ == 0) return rational_to_string(a_);
  std::string surd;
  Rational mag = b_ < 0 ? Rational(-b_) : b_;
  if (mag != 1) surd = rational_to_string(mag);
  surd += "√" + std::to_string(d_);
  if (a_ == 0) return (b_ < 0 ? "-" : "") + surd;
  return rational_to_string(a_) + (b_ < 0 ? "-" : "+") + surd;
}

QuadNum operator-(const QuadNum& x) { return QuadNum(-x.a_, -x.b_, x.d_); }

QuadNum operator+(const QuadNum& x, const QuadNum& y) {
  std::int64_t d = common_radicand(x, y);
  return QuadNum(x.a_ + y.a_, x.b_ + y.b_, d);
}

QuadNum operator-(const QuadNum& x, const QuadNum& y) { return x + (-y); }

QuadNum operator*(const QuadNum& x, const QuadNum& y) {
  std::int64_t d = common_radicand(x, y);
  return QuadNum(x.a_ * y.a_ + x.b_ * y.b_ * Rational(d), x.a_ * y.b_ + x.b_ * y.a_, d);
}

QuadNum operator/(const QuadNum& x, const QuadNum& y) { return x * y.inverse(); }

bool operator==(const QuadNum& x, const QuadNum& y) {
  return x.a_ == y.a_ && x.b_ == y.b_ && (x.b_ == 0 || x.d_ == y.d_);
}

std::strong_ordering compare(const QuadNum& x, const QuadNum& y) {
  auto to_ordering = [](int s) {
    return s < 0 ? std::strong_ordering::less
                 : (s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  };
  if (x.is_rational() || y.is_rational() || x.radicand() == y.radicand()) {
    return to_ordering((x - y).sign());
  }
  // Sign of alpha + beta with alpha = (a1 - a2) + b1 sqrt(d1), beta = -b2 sqrt(d2).
  QuadNum alpha(x.rational_part() - y.rational_part(), x.surd_part(), x.radicand());
  int s_alpha = alpha.sign();
  int s_beta = -rational_sign(y.surd_part());
  if (s_alpha == 0) return to_ordering(s_beta);
  if (s_alpha == s_beta) return to_ordering(s_alpha);
  QuadNum beta_sq(y.surd_part() * y.surd_part() * Rational(y.radicand()));
  int cmp = (alpha * alpha - beta_sq).sign();
  if (cmp > 0) return to_ordering(s_alpha);
  if (cmp < 0) return to_ordering(s_beta);
  return std::strong_ordering::equal;
}

std::pair<BigInt, BigInt> split_square_free(const BigInt& n) {
  if (n < 0) throw std::domain_error("split_square_free: negative argument");
  if (n == 0) return {BigInt(0), BigInt(1)};
  BigInt rest = n;
  BigInt square_root = 1;
  BigInt free_part = 1;
  for (BigInt p = 2; p * p <= rest; ++p) {
    int exponent = 0;
    while (rest % p == 0) {
      rest /= p;
      ++exponent;
    }
    for (int k = 0; k < exponent / 2; ++k) square_root *= p;
    if (exponent % 2 == 1) free_part *= p;
  }
  free_part *= rest;
  return {square_root, free_part};
}

std::array<QuadNum, 2> solve_quadratic_monic(const Rational& p, const Rational& q) {
  Rational disc = p * p + 4 * q;
  if (disc < 0) {
    throw std::domain_error("solve_quadratic_monic: negative discriminant " +
                            rational_to_string(disc));
  }
  BigInt num = boost::multiprecision::numerator(disc);
  BigInt den = boost::multiprecision::denominator(disc);
  auto [f, d] = split_square_free(num * den);
  Rational half_p = p / 2;
  Rational offset = Rational(f) / Rational(2 * den);
  if (d == 1) return {QuadNum(half_p - offset), QuadNum(half_p + offset)};
  std::int64_t radicand = d.convert_to<std::int64_t>();
  return {QuadNum(half_p, -offset, radicand), QuadNum(half_p, offset, radicand)};
}

std::string rational_to_string(const Rational& r) {
  BigInt num = boost::multiprecision::numerator(r);
  BigInt den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

Rational parse_rational(const std::string& text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(BigInt(text));
    BigInt num(text.substr(0, slash));
    BigInt den(text.substr(slash + 1));
    if (den == 0) throw std::domain_error("parse_rational: zero denominator");
    return Rational(num, den);
  } catch (const std::runtime_error&) {
    throw std::invalid_argument("parse_rational: malformed rational '" + text + "'");
  }
}

}  // namespace klc
