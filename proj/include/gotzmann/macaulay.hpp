#pragma once

// Macaulay representations a = binom(k(d), d) + ... + binom(k(delta), delta)
// with k(d) > ... > k(delta) >= delta > 0, the transform a^<d>, and growth
// predicates over Hilbert-function value lists.
//
// Integer binomial convention: binom(x, y) = 0 for x < y, binom(x, 0) = 1.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "gotzmann/errors.hpp"

namespace gotzmann {

namespace detail {

inline constexpr std::int64_t kInt64Max = std::numeric_limits<std::int64_t>::max();

/// min(binom(top, bottom), cap + 1) without overflow, for 0 <= cap < INT64_MAX.
inline std::int64_t binomial_capped(std::int64_t top, std::int64_t bottom, std::int64_t cap) {
  if (bottom < 0 || top < bottom) return 0;
  std::int64_t m = bottom < top - bottom ? bottom : top - bottom;
  __int128 acc = 1;
  // acc runs through binom(top - m + i, i), which is nondecreasing in i.
  for (std::int64_t i = 1; i <= m; ++i) {
    acc = acc * (top - m + i) / i;
    if (acc > cap) return cap + 1;
  }
  return static_cast<std::int64_t>(acc);
}

}  // namespace detail

/// Exact integer binomial; throws std::overflow_error past int64.
inline std::int64_t binomial(std::int64_t top, std::int64_t bottom) {
  const auto v = detail::binomial_capped(top, bottom, detail::kInt64Max - 1);
  if (v == detail::kInt64Max) throw std::overflow_error("binomial(" + std::to_string(top) + ", " +
                                                        std::to_string(bottom) + ") exceeds int64");
  return v;
}

/// The d-th Macaulay representation. `tops[i]` pairs with bottom `index - i`.
struct MacaulayRep {
  int index = 1;
  std::vector<std::int64_t> tops;

  int lowest_bottom() const { return index - static_cast<int>(tops.size()) + 1; }

  std::int64_t value() const {
    std::int64_t sum = 0;
    for (std::size_t i = 0; i < tops.size(); ++i) sum += binomial(tops[i], index - static_cast<std::int64_t>(i));
    return sum;
  }

  friend bool operator==(const MacaulayRep&, const MacaulayRep&) = default;
};

/// Greedy: at each bottom j take the largest k with binom(k, j) <= remainder.
inline MacaulayRep macaulay_rep(std::int64_t a, int d) {
  if (d <= 0) throw PreconditionViolated("macaulay_rep: index must be positive, got " + std::to_string(d));
  if (a < 0) throw PreconditionViolated("macaulay_rep: negative value " + std::to_string(a));
  MacaulayRep rep{d, {}};
  std::int64_t rem = a;
  for (std::int64_t j = d; j >= 1 && rem > 0; --j) {
    std::int64_t k;
    if (j == 1) {
      k = rem;
    } else {
      // binom(j, j) = 1 <= rem and binom(j + rem, j) > rem bound the search.
      std::int64_t lo = j, hi = j + rem;
      while (hi - lo > 1) {
        const std::int64_t mid = lo + (hi - lo) / 2;
        if (detail::binomial_capped(mid, j, rem) <= rem) lo = mid; else hi = mid;
      }
      k = lo;
    }
    rep.tops.push_back(k);
    rem -= binomial(k, j);
  }
  return rep;
}

/// a^<d> = sum binom(k(j) + 1, j + 1); 0^<d> = 0.
inline std::int64_t macaulay_transform(std::int64_t a, int d) {
  const MacaulayRep rep = macaulay_rep(a, d);
  std::int64_t sum = 0;
  for (std::size_t i = 0; i < rep.tops.size(); ++i) {
    const std::int64_t term = binomial(rep.tops[i] + 1, d - static_cast<std::int64_t>(i) + 1);
    if (sum > detail::kInt64Max - term) throw std::overflow_error("macaulay_transform exceeds int64");
    sum += term;
  }
  return sum;
}

/// Macaulay's growth bound for one step: h_next <= h_d^<d>.
inline bool macaulay_growth_ok(std::int64_t h_d, std::int64_t h_next, int d) {
  return h_next <= macaulay_transform(h_d, d);
}

/// Checks H(d+1) <= H(d)^<d-l-p> for every d >= p + l + 1 with both values in
/// range. `values[i]` is H(first_degree + i). Throws when no degree is testable.
inline bool gasharov_bound_ok(std::span<const std::int64_t> values, int first_degree, int l, int p) {
  if (p < 0) throw PreconditionViolated("gasharov_bound_ok: p must be nonnegative");
  const int last = first_degree + static_cast<int>(values.size()) - 1;
  const int start = std::max(first_degree, p + l + 1);
  if (start + 1 > last)
    throw PreconditionViolated("gasharov_bound_ok: value range too short to test any degree");
  for (int d = start; d < last; ++d) {
    const auto h = values[static_cast<std::size_t>(d - first_degree)];
    const auto next = values[static_cast<std::size_t>(d - first_degree + 1)];
    if (next > macaulay_transform(h, d - l - p)) return false;
  }
  return true;
}

/// H(0) = 1 and H(d)^<d> <= H(d+1) for 1 <= d < D, with the inequality in the
/// direction used by the scheme Hilbert-function criterion quoted in the
/// Gotzmann-representation existence argument. Contrast macaulay_growth_ok,
/// which is the classical bound H(d+1) <= H(d)^<d>.
inline bool scheme_hf_criterion(std::span<const std::int64_t> values) {
  if (values.size() < 2) throw PreconditionViolated("scheme_hf_criterion: need H(0..D) with D >= 1");
  if (values[0] != 1) return false;
  for (std::size_t d = 1; d + 1 < values.size(); ++d)
    if (macaulay_transform(values[d], static_cast<int>(d)) > values[d + 1]) return false;
  return true;
}

}  // namespace gotzmann
