#include "mcc/exact.hpp"

#include <cmath>
#include <stdexcept>

#include <boost/multiprecision/integer.hpp>

namespace mcc {

std::string to_string(const BigInt& value) { return value.str(); }

std::string to_string(const Rational& value) {
  const BigInt num = boost::multiprecision::numerator(value);
  const BigInt den = boost::multiprecision::denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

Rational parse_rational(const std::string& text) {
  try {
    const auto slash = text.find('/');
    if (slash == std::string::npos) return Rational(BigInt(text));
    const BigInt num(text.substr(0, slash));
    const BigInt den(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator");
    return Rational(num, den);
  } catch (const std::runtime_error&) {
    throw std::invalid_argument("not a rational: '" + text + "'");
  }
}

BigInt floor(const Rational& value) {
  const BigInt num = boost::multiprecision::numerator(value);
  const BigInt den = boost::multiprecision::denominator(value);
  BigInt q = num / den;  // truncates toward zero
  if (num < 0 && q * den != num) --q;
  return q;
}

BigInt ceil(const Rational& value) { return -floor(-value); }

namespace {

bool integer_sqrt(const BigInt& value, BigInt& root) {
  if (value < 0) return false;
  root = boost::multiprecision::sqrt(value);
  return root * root == value;
}

}  // namespace

bool rational_sqrt(const Rational& value, Rational& root) {
  BigInt num_root;
  BigInt den_root;
  if (!integer_sqrt(boost::multiprecision::numerator(value), num_root)) return false;
  if (!integer_sqrt(boost::multiprecision::denominator(value), den_root)) return false;
  root = Rational(num_root, den_root);
  return true;
}

QuadraticSurd::QuadraticSurd(Rational rational, Rational radical, Rational radicand)
    : rational_(std::move(rational)), radical_(std::move(radical)), radicand_(std::move(radicand)) {
  if (radicand_ < 0) throw std::invalid_argument("negative radicand");
}

void QuadraticSurd::check_radicand(const QuadraticSurd& other) const {
  if (radicand_ != other.radicand_) throw std::invalid_argument("mixed radicands");
}

int QuadraticSurd::sign() const {
  const int a = rational_.sign();
  const int b = radicand_ == 0 ? 0 : radical_.sign();
  if (b == 0) return a;
  if (a == 0 || a == b) return b;
  // Opposite signs: compare a^2 against b^2 * d.
  const Rational lhs = rational_ * rational_;
  const Rational rhs = radical_ * radical_ * radicand_;
  if (lhs == rhs) return 0;
  return lhs > rhs ? a : b;
}

double QuadraticSurd::to_double() const {
  const double root = std::sqrt(radicand_.convert_to<double>());
  return rational_.convert_to<double>() + radical_.convert_to<double>() * root;
}

std::string QuadraticSurd::to_string() const {
  if (radical_ == 0) return mcc::to_string(rational_);
  const std::string root = "sqrt(" + mcc::to_string(radicand_) + ")";
  const Rational magnitude = radical_ < 0 ? Rational(-radical_) : radical_;
  const std::string term = magnitude == 1 ? root : mcc::to_string(magnitude) + "*" + root;
  if (rational_ == 0) return (radical_ < 0 ? "-" : "") + term;
  return mcc::to_string(rational_) + (radical_ < 0 ? " - " : " + ") + term;
}

QuadraticSurd& QuadraticSurd::operator+=(const QuadraticSurd& other) {
  check_radicand(other);
  rational_ += other.rational_;
  radical_ += other.radical_;
  return *this;
}

QuadraticSurd& QuadraticSurd::operator-=(const QuadraticSurd& other) {
  check_radicand(other);
  rational_ -= other.rational_;
  radical_ -= other.radical_;
  return *this;
}

QuadraticSurd& QuadraticSurd::operator*=(const QuadraticSurd& other) {
  check_radicand(other);
  Rational rational = rational_ * other.rational_ + radical_ * other.radical_ * radicand_;
  Rational radical = rational_ * other.radical_ + radical_ * other.rational_;
  rational_ = std::move(rational);
  radical_ = std::move(radical);
  return *this;
}

QuadraticSurd& QuadraticSurd::operator*=(const Rational& factor) {
  rational_ *= factor;
  radical_ *= factor;
  return *this;
}

}  // namespace mcc
