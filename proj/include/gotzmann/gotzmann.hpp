#pragma once

// Gotzmann representations
//
//   P(d) = binom(d + a_1, a_1) + binom(d + a_2 - 1, a_2) + ... + binom(d + a_s - (s-1), a_s),
//   a_1 >= a_2 >= ... >= a_s >= 0,
//
// their length s (the Gotzmann number), and the regularity bounds built on it.
// The length can be astronomically large (binom(d+11, 10) already needs about
// 10^85 terms), so a representation is stored as runs of equal entries with
// arbitrary-precision counts.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "gotzmann/errors.hpp"
#include "gotzmann/macaulay.hpp"
#include "gotzmann/polyint.hpp"

namespace gotzmann {

struct GotzmannRun {
  int value = 0;
  Integer count = 0;
  friend bool operator==(const GotzmannRun&, const GotzmannRun&) = default;
};

/// Canonical form: run values strictly decreasing and nonnegative, counts positive.
struct GotzmannRep {
  std::vector<GotzmannRun> runs;

  /// Builds the run form of an explicit a-sequence. Throws unless it is nonincreasing and nonnegative.
  static GotzmannRep from_sequence(const std::vector<int>& a) {
    GotzmannRep rep;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] < 0 || (i > 0 && a[i] > a[i - 1]))
        throw PreconditionViolated("GotzmannRep: sequence is not nonincreasing and nonnegative");
      if (!rep.runs.empty() && rep.runs.back().value == a[i])
        ++rep.runs.back().count;
      else
        rep.runs.push_back({a[i], 1});
    }
    return rep;
  }

  Integer size() const {
    Integer s = 0;
    for (const auto& r : runs) s += r.count;
    return s;
  }
  bool empty() const noexcept { return runs.empty(); }

  /// Number of positive entries (the t with a_t != 0 largest).
  Integer positive_count() const {
    Integer t = 0;
    for (const auto& r : runs)
      if (r.value > 0) t += r.count;
    return t;
  }

  Integer count_of(int value) const {
    for (const auto& r : runs)
      if (r.value == value) return r.count;
    return 0;
  }

  bool is_valid() const {
    for (std::size_t i = 0; i < runs.size(); ++i) {
      if (runs[i].value < 0 || runs[i].count <= 0) return false;
      if (i > 0 && runs[i].value >= runs[i - 1].value) return false;
    }
    return true;
  }

  /// The explicit a-sequence. Throws std::length_error above `max_length` entries.
  std::vector<int> sequence(std::size_t max_length = 10'000'000) const {
    if (size() > max_length) throw std::length_error("Gotzmann representation too long to expand");
    std::vector<int> a;
    for (const auto& r : runs) a.insert(a.end(), static_cast<std::size_t>(r.count), r.value);
    return a;
  }

  friend bool operator==(const GotzmannRep&, const GotzmannRep&) = default;
};

/// Term i (1-based) of the expansion as a polynomial: binom(d + a_i - (i-1), a_i).
inline RationalPoly gotzmann_term(int a_i, const Integer& i) { return binom_poly(Integer(a_i - i + 1), a_i); }

/// Terms start .. start+count-1, all with entry v, summed by the hockey-stick identity:
/// binom(d + v - start + 2, v + 1) - binom(d + v - start - count + 2, v + 1).
inline RationalPoly gotzmann_run_poly(int v, const Integer& start, const Integer& count) {
  return binom_poly(Integer(v - start + 2), v + 1) - binom_poly(Integer(v - start - count + 2), v + 1);
}

inline RationalPoly rep_to_poly(const GotzmannRep& rep) {
  if (!rep.is_valid()) throw PreconditionViolated("rep_to_poly: runs are not in canonical form");
  RationalPoly out;
  Integer start = 1;
  for (const auto& r : rep.runs) {
    out += gotzmann_run_poly(r.value, start, r.count);
    start += r.count;
  }
  return out;
}

namespace detail {

// Recursion on the difference operator: the positive part of the expansion of
// P is the expansion of P(d) - P(d-1) with every entry raised by one; the
// leftover constant is the number of trailing zeros.
inline GotzmannRep gotzmann_recursive(const RationalPoly& p) {
  if (p.is_zero()) return {};
  GotzmannRep rep;
  RationalPoly rest = p;
  if (*p.degree() > 0) {
    rep = gotzmann_recursive(difference(p));
    for (auto& r : rep.runs) ++r.value;
    rest -= rep_to_poly(rep);
  }
  if (rest.degree().value_or(0) > 0)
    throw NoGotzmannRepresentation("residual " + to_string(rest) + " is not constant");
  const Rational c = rest.coeff(0);
  if (!is_integer(c)) throw NoGotzmannRepresentation("constant residual " + c.str() + " is not an integer");
  if (c < 0) throw NoGotzmannRepresentation("constant residual " + c.str() + " is negative");
  if (c > 0) rep.runs.push_back({0, numerator(c)});
  return rep;
}

}  // namespace detail

/// The unique Gotzmann representation of `p`.
/// Throws NotIntegerValued, or NoGotzmannRepresentation when none exists.
inline GotzmannRep gotzmann_rep(const RationalPoly& p) {
  if (!is_integer_valued(p)) throw NotIntegerValued(to_string(p) + " is not integer valued");
  GotzmannRep rep = detail::gotzmann_recursive(p);
  if (!rep.is_valid()) throw NoGotzmannRepresentation("expansion of " + to_string(p) + " is not nonincreasing");
  if (rep_to_poly(rep) != p) throw NoGotzmannRepresentation("expansion of " + to_string(p) + " does not reproduce it");
  return rep;
}

inline Integer gotzmann_number(const RationalPoly& p) { return gotzmann_rep(p).size(); }

/// Representation of P + Q for P, Q that both have one. The sum always has one;
/// failure there is reported as an InconsistencyError.
inline GotzmannRep gotzmann_sum(const RationalPoly& p, const RationalPoly& q) {
  gotzmann_rep(p);
  gotzmann_rep(q);
  try {
    return gotzmann_rep(p + q);
  } catch (const NoGotzmannRepresentation& e) {
    throw InconsistencyError(std::string("sum of representable polynomials has no representation: ") + e.what());
  }
}

/// Representation of 1 + binom(d+1, 1) + ... + binom(d+n, n), which equals binom(d+n+1, n).
inline GotzmannRep lemma3_rep(int n) {
  if (n < 0) throw PreconditionViolated("lemma3_rep: n must be nonnegative");
  RationalPoly p = RationalPoly::constant(1);
  for (int i = 1; i <= n; ++i) p += binom_poly(i, i);
  return gotzmann_rep(p);
}

/// Hilbert function attached to a representation: the sum of the first
/// min(d+1, s) terms evaluated at d. Agrees with the polynomial for d >= s-1.
inline std::int64_t gotzmann_hilbert_function(const GotzmannRep& rep, std::int64_t d) {
  if (d < 0) throw PreconditionViolated("gotzmann_hilbert_function: negative degree");
  std::int64_t sum = 0;
  std::int64_t start = 1;
  for (const auto& r : rep.runs) {
    if (start > d + 1) break;
    const std::int64_t take = r.count < d + 2 - start ? static_cast<std::int64_t>(r.count) : d + 2 - start;
    // terms start .. start+take-1 at d: binom(d+v-start+2, v+1) - binom(d+v-start-take+2, v+1)
    sum += binomial(d + r.value - start + 2, r.value + 1) - binomial(d + r.value - start - take + 2, r.value + 1);
    start += take;
  }
  return sum;
}

inline std::vector<std::int64_t> gotzmann_hilbert_values(const GotzmannRep& rep, std::int64_t upto) {
  std::vector<std::int64_t> out;
  for (std::int64_t d = 0; d <= upto; ++d) out.push_back(gotzmann_hilbert_function(rep, d));
  return out;
}

/// Gotzmann number of P. The kernel sheaf of any globally generated quotient
/// (generator degrees <= 0) with Hilbert polynomial P is this-regular. Not sharp.
inline Integer regularity_bound(const RationalPoly& p) { return gotzmann_number(p); }

/// Regularity bound for F when F(a) is globally generated with Hilbert polynomial P.
inline Integer regularity_bound_twisted(const RationalPoly& p, std::int64_t a) {
  if (a < 0) throw PreconditionViolated("regularity_bound_twisted: twist must be nonnegative");
  return gotzmann_number(p) + a;
}

/// "[1,1,1,0,0]" for short representations, run notation "[3^2,2^5,1^14,0^158]" otherwise.
inline std::string format_rep(const GotzmannRep& rep, std::size_t expand_up_to = 32) {
  std::string out = "[";
  if (rep.size() <= expand_up_to) {
    const auto a = rep.sequence();
    for (std::size_t i = 0; i < a.size(); ++i) out += (i ? "," : "") + std::to_string(a[i]);
  } else {
    for (std::size_t i = 0; i < rep.runs.size(); ++i)
      out += (i ? "," : "") + std::to_string(rep.runs[i].value) + "^" + rep.runs[i].count.str();
  }
  return out + "]";
}

}  // namespace gotzmann
