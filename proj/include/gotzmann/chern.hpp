#pragma once

// Rank-2 sheaves on P^3: Chern classes <-> Hilbert polynomial via
// Hirzebruch-Riemann-Roch,
//
//   P(d) = d^3/3 + (2 + c1/2) d^2 + (c1^2/2 + 2 c1 + 11/3 - c2) d + cbar,
//   cbar = c1^3/6 + c1^2 + 11 c1/6 - c1 c2/2 - 2 c2 + c3/2 + 2,
//
// and the c2 bounds. The c1 >= 0 test works for any rank and ambient dimension.

#include <cstdint>
#include <string>

#include "gotzmann/errors.hpp"
#include "gotzmann/gotzmann.hpp"
#include "gotzmann/polyint.hpp"

namespace gotzmann {

struct ChernData {
  std::int64_t c1 = 0;
  std::int64_t c2 = 0;
  std::int64_t c3 = 0;
  friend bool operator==(const ChernData&, const ChernData&) = default;
};

namespace detail {

inline Rational chern_constant_without_c3(const Rational& c1, const Rational& c2) {
  return c1 * c1 * c1 / 6 + c1 * c1 + Rational(11) * c1 / 6 - c1 * c2 / 2 - 2 * c2 + 2;
}

inline std::int64_t to_int64(const Rational& q) { return static_cast<std::int64_t>(numerator(q)); }

}  // namespace detail

inline RationalPoly hp_from_chern(const ChernData& c) {
  const Rational c1 = c.c1, c2 = c.c2, c3 = c.c3;
  const Rational cbar = detail::chern_constant_without_c3(c1, c2) + c3 / 2;
  return RationalPoly({cbar, c1 * c1 / 2 + 2 * c1 + Rational(11, 3) - c2, 2 + c1 / 2, Rational(1, 3)});
}

/// Solves the Riemann-Roch polynomial for (c1, c2, c3), in that order.
/// Throws WrongShape unless P = d^3/3 + ..., NonIntegralChern if a class is fractional.
inline ChernData chern_from_hp(const RationalPoly& p) {
  if (p.degree() != 3 || p.leading() != Rational(1, 3))
    throw WrongShape(to_string(p) + " is not the Hilbert polynomial of a rank-2 sheaf on P^3");
  const Rational c1 = 2 * (p.coeff(2) - 2);
  if (!is_integer(c1)) throw NonIntegralChern("c1 = " + c1.str() + " is not an integer");
  const Rational c2 = c1 * c1 / 2 + 2 * c1 + Rational(11, 3) - p.coeff(1);
  if (!is_integer(c2)) throw NonIntegralChern("c2 = " + c2.str() + " is not an integer");
  const Rational c3 = 2 * (p.coeff(0) - detail::chern_constant_without_c3(c1, c2));
  if (!is_integer(c3)) throw NonIntegralChern("c3 = " + c3.str() + " is not an integer");
  return {detail::to_int64(c1), detail::to_int64(c2), detail::to_int64(c3)};
}

/// c2 <= c1^2 + 3 c1 + 2 for rank-2 globally generated sheaves on P^3.
inline std::int64_t c2_upper_bound(std::int64_t c1) {
  if (c1 < 0) throw PreconditionViolated("c2_upper_bound: c1 must be nonnegative");
  return c1 * c1 + 3 * c1 + 2;
}

/// (2 c1^3 - 4 c1^2 + 2) / (3 c1 - 4), the bound for non-split globally
/// generated rank-2 vector bundles with c1 >= 4.
inline Rational chi12_bound(std::int64_t c1) {
  if (c1 < 4) throw PreconditionViolated("chi12_bound: requires c1 >= 4");
  return Rational(2 * c1 * c1 * c1 - 4 * c1 * c1 + 2, 3 * c1 - 4);
}

/// P = P3 + P2 + P1 + P0 split of a rank-2 Hilbert polynomial on P^3, where
/// P3 = binom(d+3,3) + binom(d+2,3) and P2 has c1 + 1 terms.
struct RankTwoDecomposition {
  ChernData chern;
  RationalPoly p3_part;
  std::int64_t p2_terms = 0;       // c1 + 1
  Rational linear_coeff;           // c1^2 + 3 c1 + 2 - c2, the number of degree-1 terms
  Rational constant_residual;      // cbar - 1 - b, b = c1(c1+1)(c1+2)/6
  bool bound_ok = false;           // linear_coeff >= 0
};

inline RankTwoDecomposition decompose_p3_rank2(const RationalPoly& p) {
  RankTwoDecomposition out;
  out.chern = chern_from_hp(p);
  const std::int64_t c1 = out.chern.c1, c2 = out.chern.c2;
  if (c1 < -1) throw NoGotzmannRepresentation("c1 = " + std::to_string(c1) + " < -1 leaves a negative d^2 residual");
  out.p3_part = binom_poly(3, 3) + binom_poly(2, 3);
  out.p2_terms = c1 + 1;
  out.linear_coeff = Rational(c1 * c1 + 3 * c1 + 2 - c2);
  const Rational b = Rational(c1 * (c1 + 1) * (c1 + 2), 6);
  out.constant_residual = p.coeff(0) - 1 - b;
  out.bound_ok = out.linear_coeff >= 0;
  return out;
}

struct FirstChernCheck {
  Rational c1;
  bool ok = false;
};

/// Reads c1 off the top two coefficients r d^n/n! + (r(n+1)/2 + c1) d^(n-1)/(n-1)!.
inline FirstChernCheck c1_nonneg_check(const RationalPoly& p, std::int64_t r, int n) {
  if (n < 1 || r < 1) throw PreconditionViolated("c1_nonneg_check: need n >= 1 and r >= 1");
  Integer fact_prev = 1;
  for (int i = 2; i <= n - 1; ++i) fact_prev *= i;
  const Integer fact = fact_prev * n;
  if (p.degree() != n || p.leading() != Rational(Integer(r), fact))
    throw WrongShape(to_string(p) + " does not have degree " + std::to_string(n) + " and leading coefficient " +
                     std::to_string(r) + "/" + std::to_string(n) + "!");
  FirstChernCheck out;
  out.c1 = p.coeff(static_cast<std::size_t>(n - 1)) * Rational(fact_prev) - Rational(r * (n + 1), 2);
  out.ok = out.c1 >= 0;
  return out;
}

}  // namespace gotzmann
