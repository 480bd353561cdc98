#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string>

#include "klc/types.hpp"

namespace klc {

/// Exact element a + b*sqrt(d) of a real quadratic field.
///
/// `d` is square-free and at least 2 whenever `b != 0`. Rationals are stored
/// with `b == 0` and `d == 1`, and combine with any field.
class QuadNum {
 public:
  QuadNum() = default;
  QuadNum(std::int64_t value);  // NOLINT(google-explicit-constructor)
  QuadNum(Rational value);      // NOLINT(google-explicit-constructor)
  QuadNum(Rational a, Rational b, std::int64_t d);

  const Rational& rational_part() const { return a_; }
  const Rational& surd_part() const { return b_; }
  std::int64_t radicand() const { return d_; }

  bool is_rational() const { return b_ == 0; }
  bool is_zero() const { return a_ == 0 && b_ == 0; }
  bool is_integer() const;

  QuadNum conjugate() const;
  QuadNum inverse() const;
  int sign() const;
  QuadNum abs() const { return sign() < 0 ? -*this : *this; }
  double to_double() const;
  std::string to_string() const;

  friend QuadNum operator-(const QuadNum& x);
  friend QuadNum operator+(const QuadNum& x, const QuadNum& y);
  friend QuadNum operator-(const QuadNum& x, const QuadNum& y);
  friend QuadNum operator*(const QuadNum& x, const QuadNum& y);
  friend QuadNum operator/(const QuadNum& x, const QuadNum& y);
  QuadNum& operator+=(const QuadNum& y) { return *this = *this + y; }
  QuadNum& operator-=(const QuadNum& y) { return *this = *this - y; }
  QuadNum& operator*=(const QuadNum& y) { return *this = *this * y; }

  friend bool operator==(const QuadNum& x, const QuadNum& y);

 private:
  void normalize();

  Rational a_{0};
  Rational b_{0};
  std::int64_t d_{1};
};

/// Exact comparison of the real values. Works across different radicands.
std::strong_ordering compare(const QuadNum& x, const QuadNum& y);

inline bool operator<(const QuadNum& x, const QuadNum& y) { return compare(x, y) < 0; }
inline bool operator>(const QuadNum& x, const QuadNum& y) { return compare(x, y) > 0; }
inline bool operator<=(const QuadNum& x, const QuadNum& y) { return compare(x, y) <= 0; }
inline bool operator>=(const QuadNum& x, const QuadNum& y) { return compare(x, y) >= 0; }

/// Both roots of x^2 = p*x + q, ascending. Rational roots come back with
/// `is_rational()`; otherwise the pair is conjugate over the square-free part
/// of the discriminant. Throws std::domain_error when p^2 + 4q < 0.
std::array<QuadNum, 2> solve_quadratic_monic(const Rational& p, const Rational& q);

/// Writes `n = f^2 * d` with `d` square-free; returns {f, d}.
std::pair<BigInt, BigInt> split_square_free(const BigInt& n);

std::string rational_to_string(const Rational& r);
Rational parse_rational(const std::string& text);

}  // namespace klc
