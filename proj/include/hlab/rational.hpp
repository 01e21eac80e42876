#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace hlab {

// Exact rational with normalized sign and gcd-reduced representation.
// All trace ratios and acceptance comparisons go through this type;
// decimal rendering is display-only.
struct Rational {
  long long num{0};
  long long den{1};

  Rational() = default;
  Rational(long long n, long long d) : num(n), den(d) { normalize(); }
  // NOLINTNEXTLINE(google-explicit-constructor): integers embed naturally
  Rational(long long n) : num(n), den(1) {}

  void normalize() {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
    if (num == 0) den = 1;
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return Rational(a.num * b.den + b.num * a.den, a.den * b.den);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return Rational(a.num * b.den - b.num * a.den, a.den * b.den);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return Rational(a.num * b.num, a.den * b.den);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num == 0) throw std::domain_error("Rational: division by zero");
    return Rational(a.num * b.den, a.den * b.num);
  }
  Rational operator-() const { return Rational(-num, den); }

  friend bool operator==(const Rational& a, const Rational& b) = default;
  friend bool operator<(const Rational& a, const Rational& b) {
    return (__int128)a.num * b.den < (__int128)b.num * a.den;
  }
  friend bool operator<=(const Rational& a, const Rational& b) {
    return (__int128)a.num * b.den <= (__int128)b.num * a.den;
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator>=(const Rational& a, const Rational& b) { return b <= a; }

  Rational abs() const { return num < 0 ? Rational(-num, den) : *this; }

  std::string str() const {
    return std::to_string(num) + "/" + std::to_string(den);
  }

  // Six-place decimal, truncated toward zero.
  std::string decimal() const {
    long long n = num < 0 ? -num : num;
    long long ip = n / den;
    long long frac = ((n % den) * 1000000LL) / den;
    std::string s = (num < 0 ? "-" : "") + std::to_string(ip) + ".";
    std::string f = std::to_string(frac);
    s += std::string(6 - f.size(), '0') + f;
    return s;
  }
};

}  // namespace hlab
