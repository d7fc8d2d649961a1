#pragma once

// Dimension bookkeeping for the Grassmannian construction of Quot_P(O^r) on
// P^n, and its specialization to P^1 where P(d) = k(d+1) + m.
//
// On P^1 the kernel of O^r -> F splits as K = (+) O(-t_i) with r-k summands,
// t_i >= 0 and sum t_i = m. An ExponentForm stores e_i = #{t_j = i}.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <string>
#include <vector>

#include "gotzmann/errors.hpp"
#include "gotzmann/gotzmann.hpp"
#include "gotzmann/macaulay.hpp"
#include "gotzmann/polyint.hpp"

namespace gotzmann {

/// Gr(ambient_dim, codim): codim-codimensional subspaces of a space of dimension ambient_dim.
struct GrassmannianParams {
  std::int64_t ambient_dim = 0;
  std::int64_t codim = 0;
  friend bool operator==(const GrassmannianParams&, const GrassmannianParams&) = default;
};

/// Subspaces F of S^r_degree with codim F.S_1 = P(degree+1) in S^r_{degree+1}.
struct QuotEmbedding {
  Integer s = 0;          // Gotzmann number of P
  int degree = 0;         // degree at which the Grassmannians are taken (s unless overridden)
  GrassmannianParams current;
  GrassmannianParams next;
};

/// Gotzmann number of k(d+1) + m: k terms binom(d+1-i, 1) plus k(k-1)/2 + m ones.
inline std::int64_t gotzmann_number_p1(std::int64_t k, std::int64_t m) {
  if (k < 1 || m < 0) throw PreconditionViolated("gotzmann_number_p1: need k >= 1 and m >= 0");
  return k * (k + 1) / 2 + m;
}

namespace detail {

inline GrassmannianParams grassmannian_at(const RationalPoly& p, int n, std::int64_t r, std::int64_t degree) {
  const std::int64_t dim = r * binomial(degree + n, n);
  const Rational value = eval(p, degree);
  if (!is_integer(value) || value < 0)
    throw PreconditionViolated("quot_embedding: P(" + std::to_string(degree) + ") = " + value.str() +
                               " is not a nonnegative integer");
  if (value > dim)
    throw PreconditionViolated("quot_embedding: P(" + std::to_string(degree) + ") = " + value.str() +
                               " exceeds dim S^r_" + std::to_string(degree) + " = " + std::to_string(dim));
  return {dim, static_cast<std::int64_t>(numerator(value))};
}

}  // namespace detail

/// Grassmannian data of the embedding at an explicit degree.
inline QuotEmbedding quot_embedding_at(const RationalPoly& p, int n, std::int64_t r, int degree) {
  if (n < 0 || r < 1) throw PreconditionViolated("quot_embedding: need n >= 0 and r >= 1");
  if (degree < 0) throw PreconditionViolated("quot_embedding: degree must be nonnegative");
  QuotEmbedding e;
  e.s = gotzmann_number(p);
  e.degree = degree;
  e.current = detail::grassmannian_at(p, n, r, degree);
  e.next = detail::grassmannian_at(p, n, r, degree + 1);
  return e;
}

/// The embedding at the Gotzmann number s: Gr(S^r_s, P(s)) and Gr(S^r_{s+1}, P(s+1)).
inline QuotEmbedding quot_embedding(const RationalPoly& p, int n, std::int64_t r) {
  const auto s = gotzmann_number(p);
  if (s > std::numeric_limits<int>::max()) throw PreconditionViolated("quot_embedding: Gotzmann number " + s.str() + " is too large");
  return quot_embedding_at(p, n, r, static_cast<int>(s));
}

/// Codimension of the degeneracy locus: [(r-k)l - m][k(l+2) + m].
inline std::int64_t porteous_codim(std::int64_t r, std::int64_t k, std::int64_t m, std::int64_t l) {
  if (!(1 <= k && k < r) || m < 0 || l < 0) throw PreconditionViolated("porteous_codim: need 1 <= k < r, m >= 0, l >= 0");
  return ((r - k) * l - m) * (k * (l + 2) + m);
}

/// The same codimension before simplification:
/// [2(r-k)(l+1) - 2m - (r-k)(l+2) + m][r(l+2) - (r-k)(l+2) + m].
inline std::int64_t porteous_codim_unsimplified(std::int64_t r, std::int64_t k, std::int64_t m, std::int64_t l) {
  return (2 * (r - k) * (l + 1) - 2 * m - (r - k) * (l + 2) + m) * (r * (l + 2) - (r - k) * (l + 2) + m);
}

/// dim Gr((r-k)(l+1) - m, r(l+1)) = [(r-k)(l+1) - m][k(l+1) + m].
inline std::int64_t porteous_grassmannian_dim(std::int64_t r, std::int64_t k, std::int64_t m, std::int64_t l) {
  return ((r - k) * (l + 1) - m) * (k * (l + 1) + m);
}

/// (r-k)k + rm, after checking it equals the Grassmannian dimension minus the
/// degeneracy codimension for l = 0..10.
inline std::int64_t expected_dim(std::int64_t r, std::int64_t k, std::int64_t m) {
  if (!(1 <= k && k < r) || m < 0) throw PreconditionViolated("expected_dim: need 1 <= k < r, m >= 0");
  const std::int64_t value = (r - k) * k + r * m;
  for (std::int64_t l = 0; l <= 10; ++l)
    if (porteous_grassmannian_dim(r, k, m, l) - porteous_codim(r, k, m, l) != value)
      throw InconsistencyError("expected_dim: dimension identity fails at l = " + std::to_string(l));
  return value;
}

using ExponentForm = std::map<int, std::int64_t>;

/// dim Aut((+) O(-i)^{e_i}) = sum_{i <= j} (j - i + 1) e_i e_j.
inline std::int64_t aut_dim(const ExponentForm& e) {
  std::int64_t total = 0;
  for (auto it = e.begin(); it != e.end(); ++it) {
    if (it->second < 0) throw PreconditionViolated("aut_dim: negative multiplicity");
    for (auto jt = it; jt != e.end(); ++jt) total += (jt->first - it->first + 1) * it->second * jt->second;
  }
  return total;
}

struct SplittingType {
  std::vector<int> t;  // kernel (+) O(-t_i), t_i >= 0

  std::int64_t summands() const { return static_cast<std::int64_t>(t.size()); }
  std::int64_t degree_sum() const {
    std::int64_t sum = 0;
    for (int x : t) sum += x;
    return sum;
  }
  ExponentForm exponents() const {
    ExponentForm e;
    for (int x : t) {
      if (x < 0) throw PreconditionViolated("SplittingType: negative twist");
      ++e[x];
    }
    return e;
  }
};

struct MinAutResult {
  std::int64_t min = 0;
  ExponentForm argmin;
  bool unique = false;
};

namespace detail {

/// All exponent forms with sum e_i = count and sum i e_i = total, visited as
/// nonincreasing part lists.
inline void enumerate_forms(std::int64_t count, std::int64_t total, const std::function<void(const ExponentForm&)>& fn) {
  std::vector<int> parts;
  std::function<void(std::int64_t, std::int64_t, std::int64_t)> rec = [&](std::int64_t left, std::int64_t sum,
                                                                         std::int64_t cap) {
    if (left == 0) {
      if (sum == 0) {
        ExponentForm e;
        for (int x : parts) ++e[x];
        fn(e);
      }
      return;
    }
    for (std::int64_t x = std::min(cap, sum); x >= 0; --x) {
      if (x * left < sum) break;
      parts.push_back(static_cast<int>(x));
      rec(left - 1, sum - x, x);
      parts.pop_back();
    }
  };
  rec(count, total, total);
}

}  // namespace detail

/// Minimum of aut_dim over exponent forms with sum e_i = m_count and
/// sum i e_i = n_sum. Closed form: n_sum = i m_count + e' (0 <= e' < m_count),
/// e_i = m_count - e', e_{i+1} = e', minimum m_count^2. Cross-checked against
/// exhaustive enumeration unless `verify` is false.
inline MinAutResult min_aut_dim(std::int64_t m_count, std::int64_t n_sum, bool verify = true) {
  if (m_count < 1 || n_sum < 0) throw PreconditionViolated("min_aut_dim: need m_count >= 1 and n_sum >= 0");
  MinAutResult closed;
  const std::int64_t i = n_sum / m_count;
  const std::int64_t rem = n_sum % m_count;
  closed.argmin[static_cast<int>(i)] = m_count - rem;
  if (rem > 0) closed.argmin[static_cast<int>(i + 1)] = rem;
  closed.min = m_count * m_count;
  closed.unique = true;
  if (!verify) return closed;

  std::int64_t best = -1;
  std::int64_t hits = 0;
  ExponentForm best_form;
  detail::enumerate_forms(m_count, n_sum, [&](const ExponentForm& e) {
    const auto v = aut_dim(e);
    if (best < 0 || v < best) {
      best = v;
      hits = 1;
      best_form = e;
    } else if (v == best) {
      ++hits;
    }
  });
  if (best != closed.min || hits != 1 || best_form != closed.argmin || aut_dim(closed.argmin) != closed.min)
    throw InconsistencyError("min_aut_dim: closed form disagrees with enumeration for (" + std::to_string(m_count) +
                             ", " + std::to_string(n_sum) + ")");
  return closed;
}

/// dim Hom(K, O^r) - dim Aut(K) = r sum(t_i + 1) - aut_dim.
inline std::int64_t hom_mod_aut_dim(const SplittingType& st, std::int64_t r) {
  if (st.summands() < 1 || st.summands() >= r)
    throw PreconditionViolated("hom_mod_aut_dim: need 1 <= #summands < r");
  return r * (st.degree_sum() + st.summands()) - aut_dim(st.exponents());
}

inline std::string format_form(const ExponentForm& e) {
  std::string out = "{";
  bool first = true;
  for (const auto& [i, c] : e) {
    if (c == 0) continue;
    if (!first) out += ", ";
    first = false;
    out += std::to_string(i) + ": " + std::to_string(c);
  }
  return out + "}";
}

}  // namespace gotzmann
