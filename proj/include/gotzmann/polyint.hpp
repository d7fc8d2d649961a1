#pragma once

// Exact univariate polynomials in d with rational coefficients, and the
// binomial-basis terms binom(d + c, a) used throughout the library.
//
// Binomials here are polynomials: binom(d + c, a) = prod_{j=1..a} (d + c - a + j) / j.
// The integer convention binom(x, y) = 0 for x < y lives in macaulay.hpp only.

#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "gotzmann/errors.hpp"

namespace gotzmann {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline bool is_integer(const Rational& q) { return denominator(q) == 1; }

/// Polynomial sum_i coeffs[i] * d^i. The highest stored coefficient is never
/// zero, so the zero polynomial has an empty coefficient list.
class RationalPoly {
 public:
  RationalPoly() = default;
  explicit RationalPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
  RationalPoly(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { trim(); }

  static RationalPoly constant(const Rational& c) { return RationalPoly({c}); }
  static RationalPoly variable() { return RationalPoly({Rational(0), Rational(1)}); }

  const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }

  /// Degree, or nullopt for the zero polynomial.
  std::optional<int> degree() const noexcept {
    if (coeffs_.empty()) return std::nullopt;
    return static_cast<int>(coeffs_.size()) - 1;
  }

  Rational coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }
  Rational leading() const { return coeffs_.empty() ? Rational(0) : coeffs_.back(); }

  RationalPoly& operator+=(const RationalPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
  }
  RationalPoly& operator-=(const RationalPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
  }
  RationalPoly& operator*=(const Rational& s) {
    for (auto& c : coeffs_) c *= s;
    trim();
    return *this;
  }

  friend RationalPoly operator+(RationalPoly a, const RationalPoly& b) { return a += b; }
  friend RationalPoly operator-(RationalPoly a, const RationalPoly& b) { return a -= b; }
  friend RationalPoly operator-(RationalPoly a) { return a *= Rational(-1); }
  friend RationalPoly operator*(RationalPoly a, const Rational& s) { return a *= s; }
  friend RationalPoly operator*(const Rational& s, RationalPoly a) { return a *= s; }
  friend RationalPoly operator*(const RationalPoly& a, const RationalPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return RationalPoly(std::move(out));
  }
  friend bool operator==(const RationalPoly&, const RationalPoly&) = default;

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }
  std::vector<Rational> coeffs_;
};

/// Exact value P(d).
inline Rational eval(const RationalPoly& p, const Rational& d) {
  Rational acc = 0;
  const auto& c = p.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * d + *it;
  return acc;
}
inline Rational eval(const RationalPoly& p, std::int64_t d) { return eval(p, Rational(d)); }

/// binom(d + c, a) as an explicit polynomial in d; the constant 1 when a == 0.
inline RationalPoly binom_poly(const Integer& c, int a) {
  if (a < 0) throw PreconditionViolated("binom_poly: negative bottom index");
  RationalPoly out = RationalPoly::constant(1);
  for (int j = 1; j <= a; ++j) {
    // factor (d + c - a + j) / j
    RationalPoly factor({Rational(Integer(c - a + j), Integer(j)), Rational(1, j)});
    out = out * factor;
  }
  return out;
}

inline RationalPoly binom_poly(std::int64_t c, int a) { return binom_poly(Integer(c), a); }

/// P(d + t).
inline RationalPoly shift(const RationalPoly& p, std::int64_t t) {
  const RationalPoly linear({Rational(t), Rational(1)});
  RationalPoly acc;
  const auto& c = p.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * linear + RationalPoly::constant(*it);
  return acc;
}

/// Backward difference P(d) - P(d - 1).
inline RationalPoly difference(const RationalPoly& p) { return p - shift(p, -1); }

/// A polynomial of degree e is integer valued iff it is integral at e + 1 consecutive integers.
inline bool is_integer_valued(const RationalPoly& p) {
  const auto deg = p.degree();
  if (!deg) return true;
  for (int d = 0; d <= *deg; ++d)
    if (!is_integer(eval(p, d))) return false;
  return true;
}

/// Lagrange interpolation through (d, v) pairs with distinct d.
inline RationalPoly interpolate(std::span<const std::pair<std::int64_t, Rational>> points) {
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = i + 1; j < points.size(); ++j)
      if (points[i].first == points[j].first)
        throw PreconditionViolated("interpolate: duplicate abscissa " + std::to_string(points[i].first));
  RationalPoly out;
  for (std::size_t i = 0; i < points.size(); ++i) {
    RationalPoly basis = RationalPoly::constant(1);
    Rational denom = 1;
    for (std::size_t j = 0; j < points.size(); ++j) {
      if (j == i) continue;
      basis = basis * RationalPoly({Rational(-points[j].first), Rational(1)});
      denom *= Rational(points[i].first - points[j].first);
    }
    out += basis * (points[i].second / denom);
  }
  return out;
}

inline RationalPoly interpolate(const std::vector<std::pair<std::int64_t, Rational>>& points) {
  return interpolate(std::span<const std::pair<std::int64_t, Rational>>(points));
}

// ---- text formats ---------------------------------------------------------

inline Rational parse_rational(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  auto parse_int = [&](std::string_view s) {
    s = trim(s);
    std::string_view digits = s;
    if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string_view::npos)
      throw ParseError("not an integer: '" + std::string(s) + "'");
    return Integer(std::string(s.front() == '+' ? s.substr(1) : s));
  };
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  Integer den = parse_int(text.substr(slash + 1));
  if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  return Rational(parse_int(text.substr(0, slash)), den);
}

/// Parses the constant-first comma format: "2,3" is 3d + 2.
inline RationalPoly parse_poly(std::string_view text) {
  std::vector<Rational> coeffs;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    coeffs.push_back(parse_rational(text.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return RationalPoly(std::move(coeffs));
}

/// Inverse of parse_poly; the zero polynomial prints as "0".
inline std::string format_poly(const RationalPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
    if (i) out += ',';
    out += p.coeffs()[i].str();
  }
  return out;
}

/// Human-readable form, highest degree first: "1/3*d^3 + 4*d^2 + 11/3*d + 4".
inline std::string to_string(const RationalPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = *p.degree(); i >= 0; --i) {
    Rational c = p.coeff(static_cast<std::size_t>(i));
    if (c == 0) continue;
    const bool neg = c < 0;
    if (neg) c = -c;
    if (first) {
      if (neg) os << '-';
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    if (i == 0 || c != 1) {
      os << c.str();
      if (i > 0) os << '*';
    }
    if (i >= 1) os << 'd';
    if (i >= 2) os << '^' << i;
  }
  return os.str();
}

inline std::ostream& operator<<(std::ostream& os, const RationalPoly& p) { return os << to_string(p); }

}  // namespace gotzmann
