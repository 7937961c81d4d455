#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace mcc {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Decimal rendering; rationals come out as "p/q", or "p" when the
/// denominator is 1.
std::string to_string(const BigInt& value);
std::string to_string(const Rational& value);

/// Parses the output of to_string(Rational).
Rational parse_rational(const std::string& text);

/// Integer ceiling of a rational.
BigInt ceil(const Rational& value);
/// Integer floor of a rational.
BigInt floor(const Rational& value);

/// n choose 2 for nonnegative n.
inline long long choose2(long long n) { return n * (n - 1) / 2; }

/// Returns true and stores the root when `value` is the square of a
/// nonnegative rational.
bool rational_sqrt(const Rational& value, Rational& root);

/**
 * An element a + b*sqrt(d) of the quadratic extension Q(sqrt(d)), d >= 0.
 *
 * Every quantity in the smoothing bound and the vertex-prefix bound lives in
 * this field with d = z, so comparisons stay exact even when sqrt(z) is
 * irrational. Operands of binary operations must share the same radicand.
 */
class QuadraticSurd {
 public:
  QuadraticSurd() = default;
  QuadraticSurd(Rational rational, Rational radical, Rational radicand);

  static QuadraticSurd rational(const Rational& value, const Rational& radicand) {
    return {value, 0, radicand};
  }
  static QuadraticSurd root(const Rational& radicand) { return {0, 1, radicand}; }

  const Rational& rational_part() const { return rational_; }
  const Rational& radical_part() const { return radical_; }
  const Rational& radicand() const { return radicand_; }

  /// -1, 0 or 1.
  int sign() const;
  double to_double() const;
  std::string to_string() const;

  QuadraticSurd operator-() const { return {-rational_, -radical_, radicand_}; }
  QuadraticSurd& operator+=(const QuadraticSurd& other);
  QuadraticSurd& operator-=(const QuadraticSurd& other);
  QuadraticSurd& operator*=(const QuadraticSurd& other);
  QuadraticSurd& operator*=(const Rational& factor);

  friend QuadraticSurd operator+(QuadraticSurd a, const QuadraticSurd& b) { return a += b; }
  friend QuadraticSurd operator-(QuadraticSurd a, const QuadraticSurd& b) { return a -= b; }
  friend QuadraticSurd operator*(QuadraticSurd a, const QuadraticSurd& b) { return a *= b; }
  friend QuadraticSurd operator*(QuadraticSurd a, const Rational& b) { return a *= b; }
  friend QuadraticSurd operator*(const Rational& a, QuadraticSurd b) { return b *= a; }

  friend bool operator==(const QuadraticSurd& a, const QuadraticSurd& b) {
    return (a - b).sign() == 0;
  }
  friend bool operator<(const QuadraticSurd& a, const QuadraticSurd& b) {
    return (a - b).sign() < 0;
  }
  friend bool operator<=(const QuadraticSurd& a, const QuadraticSurd& b) {
    return (a - b).sign() <= 0;
  }

 private:
  void check_radicand(const QuadraticSurd& other) const;

  Rational rational_;
  Rational radical_;
  Rational radicand_;
};

}  // namespace mcc
