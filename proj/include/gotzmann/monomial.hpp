#pragma once

// Monomial ideals in S = k[x0, ..., xn] and monomial submodules
// N = (+)_j I_j e_j of twisted free modules F = (+)_j S e_j, deg e_j = f_j <= 0.
//
// Hilbert functions of M = F/N by enumeration and by the Taylor-complex
// numerator, Hilbert polynomials, lexification, saturation, and the
// Eliahou-Kervaire regularity of strongly stable ideals.
//
// Lex order is x0 > x1 > ... > xn throughout.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gotzmann/errors.hpp"
#include "gotzmann/gotzmann.hpp"
#include "gotzmann/macaulay.hpp"
#include "gotzmann/polyint.hpp"

namespace gotzmann {

class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<int> exponents) : exps_(std::move(exponents)) {
    for (int e : exps_)
      if (e < 0) throw PreconditionViolated("Monomial: negative exponent");
  }
  static Monomial one(std::size_t vars) { return Monomial(std::vector<int>(vars, 0)); }
  static Monomial variable(std::size_t vars, std::size_t i) {
    std::vector<int> e(vars, 0);
    e.at(i) = 1;
    return Monomial(std::move(e));
  }

  std::size_t vars() const noexcept { return exps_.size(); }
  int operator[](std::size_t i) const { return exps_[i]; }
  const std::vector<int>& exponents() const noexcept { return exps_; }

  int degree() const noexcept {
    int d = 0;
    for (int e : exps_) d += e;
    return d;
  }

  bool divides(const Monomial& other) const noexcept {
    for (std::size_t i = 0; i < exps_.size(); ++i)
      if (exps_[i] > other.exps_[i]) return false;
    return true;
  }

  Monomial times_variable(std::size_t i) const {
    Monomial m = *this;
    ++m.exps_.at(i);
    return m;
  }
  Monomial divided_by_variable(std::size_t i) const {
    Monomial m = *this;
    if (m.exps_.at(i) == 0) throw PreconditionViolated("Monomial: variable does not divide");
    --m.exps_[i];
    return m;
  }

  friend Monomial lcm(const Monomial& a, const Monomial& b) {
    std::vector<int> e(a.exps_.size());
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::max(a.exps_[i], b.exps_[i]);
    return Monomial(std::move(e));
  }

  // Among monomials of equal degree this is lex order with x0 largest.
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<int> exps_;
};

/// Number of monomials of degree `degree` in `vars` variables.
inline std::int64_t count_monomials(std::size_t vars, std::int64_t degree) {
  if (degree < 0 || vars == 0) return degree == 0 && vars == 0 ? 1 : 0;
  return binomial(degree + static_cast<std::int64_t>(vars) - 1, static_cast<std::int64_t>(vars) - 1);
}

/// Calls fn on every monomial of the given degree, lex-largest first.
inline void for_each_monomial(std::size_t vars, int degree, const std::function<void(const Monomial&)>& fn) {
  if (degree < 0 || vars == 0) return;
  std::vector<int> e(vars, 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
    if (i + 1 == vars) {
      e[i] = left;
      fn(Monomial(e));
      return;
    }
    for (int a = left; a >= 0; --a) {
      e[i] = a;
      rec(i + 1, left - a);
    }
  };
  rec(0, degree);
}

/// The monomial at 0-based position `rank` of the lex-descending list of degree-`degree` monomials.
inline Monomial unrank_lex(std::size_t vars, int degree, std::int64_t rank) {
  if (rank < 0 || rank >= count_monomials(vars, degree)) throw PreconditionViolated("unrank_lex: rank out of range");
  std::vector<int> e(vars, 0);
  int left = degree;
  for (std::size_t v = 0; v + 1 < vars; ++v) {
    for (int a = left; a >= 0; --a) {
      const std::int64_t below = count_monomials(vars - v - 1, left - a);
      if (rank < below) {
        e[v] = a;
        left -= a;
        break;
      }
      rank -= below;
    }
  }
  e[vars - 1] = left;
  return Monomial(std::move(e));
}

/// Monomial ideal with a minimal generating set kept in canonical order
/// (degree ascending, then lex descending).
class MonomialIdeal {
 public:
  explicit MonomialIdeal(std::size_t vars = 1) : vars_(vars) {
    if (vars == 0) throw PreconditionViolated("MonomialIdeal: need at least one variable");
  }
  MonomialIdeal(std::size_t vars, std::vector<Monomial> generators) : MonomialIdeal(vars) {
    for (const auto& g : generators)
      if (g.vars() != vars) throw PreconditionViolated("MonomialIdeal: generator has wrong variable count");
    gens_ = minimalize(std::move(generators));
  }

  static MonomialIdeal unit(std::size_t vars) { return MonomialIdeal(vars, {Monomial::one(vars)}); }
  static MonomialIdeal maximal(std::size_t vars) {
    std::vector<Monomial> g;
    for (std::size_t i = 0; i < vars; ++i) g.push_back(Monomial::variable(vars, i));
    return MonomialIdeal(vars, std::move(g));
  }

  std::size_t vars() const noexcept { return vars_; }
  /// Projective dimension of the ambient space: vars - 1.
  int n() const noexcept { return static_cast<int>(vars_) - 1; }
  const std::vector<Monomial>& gens() const noexcept { return gens_; }
  bool is_zero() const noexcept { return gens_.empty(); }
  bool is_unit() const noexcept { return gens_.size() == 1 && gens_.front().degree() == 0; }

  bool contains(const Monomial& m) const noexcept {
    for (const auto& g : gens_)
      if (g.divides(m)) return true;
    return false;
  }

  /// Largest generator degree; nullopt for the zero ideal.
  std::optional<int> max_generator_degree() const noexcept {
    if (gens_.empty()) return std::nullopt;
    return gens_.back().degree();
  }

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

  static std::vector<Monomial> minimalize(std::vector<Monomial> cands) {
    std::sort(cands.begin(), cands.end(), [](const Monomial& a, const Monomial& b) {
      if (a.degree() != b.degree()) return a.degree() < b.degree();
      return a > b;
    });
    std::vector<Monomial> kept;
    for (auto& c : cands) {
      bool redundant = false;
      for (const auto& k : kept)
        if (k.divides(c)) {
          redundant = true;
          break;
        }
      if (!redundant) kept.push_back(std::move(c));
    }
    return kept;
  }

 private:
  std::size_t vars_;
  std::vector<Monomial> gens_;
};

struct ModuleComponent {
  int twist = 0;
  MonomialIdeal ideal;
  friend bool operator==(const ModuleComponent&, const ModuleComponent&) = default;
};

/// N = (+)_j I_j e_j inside F = (+)_j S e_j with deg e_j = twist_j, twists
/// nondecreasing and <= 0. Functions taking a module describe M = F/N.
class MonomialModule {
 public:
  MonomialModule(std::size_t vars, std::vector<ModuleComponent> components)
      : vars_(vars), comps_(std::move(components)) {
    if (vars == 0) throw PreconditionViolated("MonomialModule: need at least one variable");
    int prev = std::numeric_limits<int>::min();
    for (const auto& c : comps_) {
      if (c.ideal.vars() != vars) throw PreconditionViolated("MonomialModule: component ideal has wrong variable count");
      if (c.twist > 0) throw PreconditionViolated("MonomialModule: twists must be <= 0");
      if (c.twist < prev) throw PreconditionViolated("MonomialModule: twists must be nondecreasing");
      prev = c.twist;
    }
  }

  std::size_t vars() const noexcept { return vars_; }
  int n() const noexcept { return static_cast<int>(vars_) - 1; }
  std::size_t rank() const noexcept { return comps_.size(); }
  const std::vector<ModuleComponent>& components() const noexcept { return comps_; }

  int min_twist() const noexcept { return comps_.empty() ? 0 : comps_.front().twist; }
  int max_twist() const noexcept { return comps_.empty() ? 0 : comps_.back().twist; }

  friend bool operator==(const MonomialModule&, const MonomialModule&) = default;

 private:
  std::size_t vars_;
  std::vector<ModuleComponent> comps_;
};

// ---- Hilbert functions ------------------------------------------------------

/// dim_k (S/I)_degree by direct enumeration.
inline std::int64_t hf_enumerate(const MonomialIdeal& ideal, std::int64_t degree) {
  if (degree < 0) return 0;
  std::int64_t count = 0;
  for_each_monomial(ideal.vars(), static_cast<int>(degree), [&](const Monomial& m) {
    if (!ideal.contains(m)) ++count;
  });
  return count;
}

/// dim_k M_d = sum_j dim_k (S/I_j)_{d - f_j}.
inline std::int64_t hf_enumerate(const MonomialModule& mod, std::int64_t d) {
  std::int64_t total = 0;
  for (const auto& c : mod.components()) total += hf_enumerate(c.ideal, d - c.twist);
  return total;
}

inline constexpr std::size_t kDefaultMaxSeriesGenerators = 20;

/// Numerator Q(t) of the Hilbert series Q(t) / (1-t)^(n+1) of S/I, as the
/// alternating sum over generator subsets T of t^deg lcm(T). out[i] is the t^i coefficient.
inline std::vector<std::int64_t> hilbert_series_numerator(const MonomialIdeal& ideal,
                                                          std::size_t max_generators = kDefaultMaxSeriesGenerators) {
  const auto& g = ideal.gens();
  if (g.size() > max_generators)
    throw TooManyGenerators(std::to_string(g.size()) + " generators exceed the inclusion-exclusion bound of " +
                            std::to_string(max_generators));
  std::vector<std::int64_t> out(1, 0);
  std::function<void(std::size_t, const Monomial&, int)> rec = [&](std::size_t i, const Monomial& l, int sign) {
    if (i == g.size()) {
      const auto deg = static_cast<std::size_t>(l.degree());
      if (out.size() <= deg) out.resize(deg + 1, 0);
      out[deg] += sign;
      return;
    }
    rec(i + 1, l, sign);
    rec(i + 1, lcm(l, g[i]), -sign);
  };
  rec(0, Monomial::one(ideal.vars()), 1);
  while (out.size() > 1 && out.back() == 0) out.pop_back();
  return out;
}

/// [t^degree] Q(t) / (1-t)^vars.
inline std::int64_t hf_from_numerator(std::span<const std::int64_t> numerator, std::size_t vars, std::int64_t degree) {
  std::int64_t total = 0;
  for (std::size_t i = 0; i < numerator.size(); ++i) {
    if (numerator[i] == 0) continue;
    total += numerator[i] * count_monomials(vars, degree - static_cast<std::int64_t>(i));
  }
  return total;
}

/// Exact Hilbert polynomial of M = F/N from the series numerators: component j
/// contributes sum_i q_i binom(d - f_j - i + n, n).
inline RationalPoly hilbert_polynomial(const MonomialModule& mod,
                                       std::size_t max_generators = kDefaultMaxSeriesGenerators) {
  RationalPoly out;
  const int n = mod.n();
  for (const auto& c : mod.components()) {
    const auto q = hilbert_series_numerator(c.ideal, max_generators);
    for (std::size_t i = 0; i < q.size(); ++i) {
      if (q[i] == 0) continue;
      out += binom_poly(n - static_cast<std::int64_t>(i) - c.twist, n) * Rational(q[i]);
    }
  }
  return out;
}

// ---- ideal operations -------------------------------------------------------

/// I : x_i.
inline MonomialIdeal colon_by_variable(const MonomialIdeal& ideal, std::size_t i) {
  if (i >= ideal.vars()) throw PreconditionViolated("colon_by_variable: variable index out of range");
  std::vector<Monomial> g;
  g.reserve(ideal.gens().size());
  for (const auto& m : ideal.gens()) g.push_back(m[i] > 0 ? m.divided_by_variable(i) : m);
  return MonomialIdeal(ideal.vars(), std::move(g));
}

inline MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (a.vars() != b.vars()) throw PreconditionViolated("intersect: variable counts differ");
  std::vector<Monomial> g;
  g.reserve(a.gens().size() * b.gens().size());
  for (const auto& x : a.gens())
    for (const auto& y : b.gens()) g.push_back(lcm(x, y));
  return MonomialIdeal(a.vars(), std::move(g));
}

/// I : m^infinity, iterating I <- intersection of the I : x_i to a fixpoint.
inline MonomialIdeal saturate(const MonomialIdeal& ideal) {
  MonomialIdeal cur = ideal;
  while (true) {
    MonomialIdeal next = colon_by_variable(cur, 0);
    for (std::size_t i = 1; i < cur.vars(); ++i) next = intersect(next, colon_by_variable(cur, i));
    if (next == cur) return cur;
    cur = std::move(next);
  }
}

/// Lexsegment ideal with the Hilbert function of `ideal`. In degree e the lex
/// ideal holds the first dim I_e monomials; its new generators in degree e are
/// the ones past the shadow of degree e-1, whose size Macaulay's theorem gives
/// as N_e - h(e-1)^<e-1>. Stops at the first e >= max generator degree where
/// h(e+1) = h(e)^<e>, after which growth stays maximal (Gotzmann persistence).
inline MonomialIdeal lexify(const MonomialIdeal& ideal,
                            std::size_t max_generators = kDefaultMaxSeriesGenerators) {
  const std::size_t vars = ideal.vars();
  if (ideal.is_zero() || ideal.is_unit()) return ideal;
  const int top = *ideal.max_generator_degree();
  const auto q = hilbert_series_numerator(ideal, max_generators);
  auto h = [&](std::int64_t e) { return hf_from_numerator(q, vars, e); };

  constexpr int kDegreeLimit = 100000;
  std::vector<Monomial> gens;
  for (int e = 1; e <= kDegreeLimit; ++e) {
    const std::int64_t total = count_monomials(vars, e);
    const std::int64_t in_ideal = total - h(e);
    const std::int64_t shadow = e == 1 ? 0 : total - macaulay_transform(h(e - 1), e - 1);
    if (in_ideal < shadow)
      throw InconsistencyError("lexify: Hilbert function exceeds Macaulay's bound in degree " + std::to_string(e));
    for (std::int64_t r = shadow; r < in_ideal; ++r) gens.push_back(unrank_lex(vars, e, r));
    if (e >= top && h(e + 1) == macaulay_transform(h(e), e)) return MonomialIdeal(vars, std::move(gens));
  }
  throw InconsistencyError("lexify: no generation certificate below degree " + std::to_string(kDegreeLimit));
}

inline MonomialModule lexify(const MonomialModule& mod, std::size_t max_generators = kDefaultMaxSeriesGenerators) {
  std::vector<ModuleComponent> comps;
  for (const auto& c : mod.components()) comps.push_back({c.twist, lexify(c.ideal, max_generators)});
  return MonomialModule(mod.vars(), std::move(comps));
}

/// x_i g / x_j in I for every generator g, x_j | g, i < j.
inline bool is_strongly_stable(const MonomialIdeal& ideal) {
  for (const auto& g : ideal.gens())
    for (std::size_t j = 1; j < ideal.vars(); ++j) {
      if (g[j] == 0) continue;
      const Monomial base = g.divided_by_variable(j);
      for (std::size_t i = 0; i < j; ++i)
        if (!ideal.contains(base.times_variable(i))) return false;
    }
  return true;
}

/// Castelnuovo-Mumford regularity of a strongly stable ideal (Eliahou-Kervaire:
/// the largest minimal generator degree; char 0, or any field for lex ideals).
/// 0 for the zero ideal.
inline int stable_regularity(const MonomialIdeal& ideal) {
  if (!is_strongly_stable(ideal)) throw NotStronglyStable("stable_regularity: ideal is not strongly stable");
  return ideal.max_generator_degree().value_or(0);
}

// ---- experimental checks ----------------------------------------------------

struct RegularityReport {
  RationalPoly hilbert_polynomial;
  Integer s = 0;       // Gotzmann number of the Hilbert polynomial
  int reg_proxy = 0;   // max over components of the regularity of the saturated lex ideal
  bool ok = false;     // reg_proxy <= s
};

/// Lexify, saturate, and read off the Eliahou-Kervaire degree of every component,
/// then compare against the Gotzmann number of the module's Hilbert polynomial.
inline RegularityReport check_gotzmann_regularity(const MonomialModule& mod) {
  RegularityReport report;
  report.hilbert_polynomial = hilbert_polynomial(mod);
  report.s = gotzmann_number(report.hilbert_polynomial);
  for (const auto& c : mod.components())
    report.reg_proxy = std::max(report.reg_proxy, stable_regularity(saturate(lexify(c.ideal))));
  report.ok = report.reg_proxy <= report.s;
  return report;
}

struct PersistenceReport {
  std::int64_t h_d = 0, h_d1 = 0, h_d2 = 0;
  std::int64_t bound_d = 0;   // H(d)^<d-l-p>
  std::int64_t bound_d1 = 0;  // H(d+1)^<d+1-l-p>
  bool equality = false;      // H(d+1) == bound_d
  bool persists = false;      // equality and H(d+2) == bound_d1
};

/// Maximal-growth persistence for modules generated in degree <= d. Throws
/// InconsistencyError on a counterexample (equality at d but not at d+1).
inline PersistenceReport check_persistence(const MonomialModule& mod, int d, int l, int p) {
  if (p < 0) throw PreconditionViolated("check_persistence: p must be nonnegative");
  if (d < p + l + 1) throw PreconditionViolated("check_persistence: need d >= p + l + 1");
  for (const auto& c : mod.components())
    if (auto g = c.ideal.max_generator_degree(); g && *g + c.twist > d)
      throw PreconditionViolated("check_persistence: submodule has a generator above degree " + std::to_string(d));
  PersistenceReport r;
  r.h_d = hf_enumerate(mod, d);
  r.h_d1 = hf_enumerate(mod, d + 1);
  r.h_d2 = hf_enumerate(mod, d + 2);
  r.bound_d = macaulay_transform(r.h_d, d - l - p);
  r.bound_d1 = macaulay_transform(r.h_d1, d + 1 - l - p);
  r.equality = r.h_d1 == r.bound_d;
  if (r.equality) {
    r.persists = r.h_d2 == r.bound_d1;
    if (!r.persists)
      throw InconsistencyError("persistence counterexample at degree " + std::to_string(d) + ": H(d+2) = " +
                               std::to_string(r.h_d2) + " but bound is " + std::to_string(r.bound_d1));
  }
  return r;
}

// ---- text format ------------------------------------------------------------

/// "x0^2 x1" (factors separated by spaces or '*'); "1" is the unit monomial.
inline Monomial parse_monomial(std::string_view text, std::size_t vars) {
  std::vector<int> e(vars, 0);
  std::size_t pos = 0;
  bool any = false;
  auto skip = [&] {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '*' || text[pos] == '\t')) ++pos;
  };
  auto number = [&]() -> int {
    const std::size_t start = pos;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
    if (start == pos) throw ParseError("expected a number in monomial '" + std::string(text) + "'");
    return std::stoi(std::string(text.substr(start, pos - start)));
  };
  skip();
  while (pos < text.size()) {
    if (text[pos] == '1' && !any) {
      ++pos;
      skip();
      if (pos != text.size()) throw ParseError("unexpected text after '1' in '" + std::string(text) + "'");
      return Monomial(std::move(e));
    }
    if (text[pos] != 'x') throw ParseError("expected a variable x<i> in monomial '" + std::string(text) + "'");
    ++pos;
    const int var = number();
    if (static_cast<std::size_t>(var) >= vars)
      throw ParseError("variable x" + std::to_string(var) + " out of range for " + std::to_string(vars) + " variables");
    int power = 1;
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      power = number();
    }
    e[static_cast<std::size_t>(var)] += power;
    any = true;
    skip();
  }
  if (!any) throw ParseError("empty monomial");
  return Monomial(std::move(e));
}

/// Comma-separated generators; "" or "0" is the zero ideal.
inline MonomialIdeal parse_ideal(std::string_view text, std::size_t vars) {
  std::vector<Monomial> g;
  const auto blank = text.find_first_not_of(" \t");
  if (blank == std::string_view::npos) return MonomialIdeal(vars);
  if (text.substr(blank) == "0") return MonomialIdeal(vars);
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    g.push_back(parse_monomial(text.substr(start, comma - start), vars));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return MonomialIdeal(vars, std::move(g));
}

inline std::string format_monomial(const Monomial& m) {
  std::string out;
  for (std::size_t i = 0; i < m.vars(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += ' ';
    out += 'x' + std::to_string(i);
    if (m[i] > 1) out += '^' + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

inline std::string format_ideal(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) return "0";
  std::string out;
  for (const auto& g : ideal.gens()) {
    if (!out.empty()) out += ", ";
    out += format_monomial(g);
  }
  return out;
}

}  // namespace gotzmann
