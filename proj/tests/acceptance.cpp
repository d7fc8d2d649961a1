// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "gotzmann/chern.hpp"
#include "gotzmann/cli.hpp"
#include "gotzmann/errors.hpp"
#include "gotzmann/gotzmann.hpp"
#include "gotzmann/io.hpp"
#include "gotzmann/macaulay.hpp"
#include "gotzmann/monomial.hpp"
#include "gotzmann/polyint.hpp"
#include "gotzmann/quotdim.hpp"
#include "oracles.hpp"

using namespace gotzmann;

namespace {

struct Verdict {
  bool pass = true;
  std::string detail;
};

std::vector<MonomialModule> corpus(std::uint64_t seed, int count) {
  std::mt19937_64 rng(seed);
  std::vector<MonomialModule> out;
  for (int i = 0; i < count; ++i) out.push_back(oracle::random_module(rng));
  return out;
}

Verdict c1() {
  const auto rep = macaulay_rep(11, 3);
  const bool ok = rep.index == 3 && rep.tops == std::vector<std::int64_t>{5, 2} && macaulay_transform(11, 3) == 16;
  return {ok, "11 = binom(5,3) + binom(2,2), 11^<3> = " + std::to_string(macaulay_transform(11, 3))};
}

Verdict c2() {
  const auto rep = gotzmann_rep(RationalPoly({2, 3}));
  return {rep.sequence() == std::vector<int>{1, 1, 1, 0, 0} && gotzmann_number(RationalPoly({2, 3})) == 5,
          "3d+2 -> " + format_rep(rep)};
}

Verdict c3() {
  try {
    gotzmann_rep(RationalPoly({0, 1}));
  } catch (const NoGotzmannRepresentation& e) {
    return {true, std::string("NoGotzmannRepresentation: ") + e.what()};
  }
  return {false, "no error raised"};
}

Verdict c4() {
  for (int n = 0; n <= 10; ++n)
    if (rep_to_poly(lemma3_rep(n)) != binom_poly(n + 1, n)) return {false, "fails at n = " + std::to_string(n)};
  return {true, "n = 0..10"};
}

Verdict c5() {
  std::mt19937_64 rng(5);
  const int samples = 2000;
  for (int i = 0; i < samples; ++i) {
    const auto rep = GotzmannRep::from_sequence(oracle::random_rep(rng, 12, 6));
    if (gotzmann_rep(rep_to_poly(rep)) != rep) return {false, "fails on " + format_rep(rep)};
  }
  return {true, std::to_string(samples) + " samples"};
}

Verdict c6() {
  std::mt19937_64 rng(6);
  int criterion_ok = 0, equality_ok = 0;
  std::string first_bad;
  const int samples = 100;
  for (int i = 0; i < samples; ++i) {
    const auto rep = GotzmannRep::from_sequence(oracle::random_rep(rng, 12, 6));
    const auto s = static_cast<std::int64_t>(rep.size());
    const auto h = gotzmann_hilbert_values(rep, s + 3);
    const bool crit = scheme_hf_criterion(h);
    bool eq = true;
    for (std::int64_t d = std::max<std::int64_t>(1, s - 1); d < s + 3; ++d)
      eq = eq && h[static_cast<std::size_t>(d + 1)] == macaulay_transform(h[static_cast<std::size_t>(d)], static_cast<int>(d));
    criterion_ok += crit;
    equality_ok += eq;
    if ((!crit || !eq) && first_bad.empty()) first_bad = format_rep(rep);
  }
  return {criterion_ok == samples && equality_ok == samples,
          "criterion " + std::to_string(criterion_ok) + "/" + std::to_string(samples) + ", equality from s-1 " +
              std::to_string(equality_ok) + "/" + std::to_string(samples) +
              (first_bad.empty() ? "" : ", first failure " + first_bad)};
}

Verdict c7() {
  const auto mods = corpus(7, 200);
  for (const auto& mod : mods) {
    const auto hp = hilbert_polynomial(mod);
    for (int d = 24; d <= 29; ++d)
      if (eval(hp, d) != Rational(hf_enumerate(mod, d))) return {false, "polynomial mismatch: " + module_to_json(mod).dump()};
    for (const auto& c : mod.components()) {
      const auto expanded = oracle::series_expand(hilbert_series_numerator(c.ideal), mod.vars(), 12);
      for (int d = 0; d <= 12; ++d)
        if (hf_enumerate(c.ideal, d) != expanded[static_cast<std::size_t>(d)])
          return {false, "series mismatch: " + module_to_json(mod).dump()};
    }
  }
  return {true, std::to_string(mods.size()) + " modules"};
}

Verdict c8() {
  const auto mods = corpus(7, 200);
  for (const auto& mod : mods) {
    try {
      gotzmann_rep(hilbert_polynomial(mod));
    } catch (const Error& e) {
      return {false, std::string(e.kind()) + " on " + module_to_json(mod).dump()};
    }
  }
  return {true, std::to_string(mods.size()) + " modules"};
}

Verdict c9() {
  const auto mods = corpus(7, 200);
  int equalities = 0;
  for (const auto& mod : mods) {
    std::vector<std::int64_t> h;
    for (int d = mod.min_twist(); d <= 16; ++d) h.push_back(hf_enumerate(mod, d));
    for (int p = 0; p <= 2; ++p)
      if (!gasharov_bound_ok(h, mod.min_twist(), mod.max_twist(), p))
        return {false, "growth bound fails (p = " + std::to_string(p) + ") on " + module_to_json(mod).dump()};
    const auto lex = lexify(mod);
    int frontier = 0;
    for (const auto& c : lex.components())
      if (auto g = c.ideal.max_generator_degree()) frontier = std::max(frontier, *g + c.twist);
    for (int p = 0; p <= 2; ++p) {
      try {
        const auto r = check_persistence(lex, std::max(frontier, p + lex.max_twist() + 1), lex.max_twist(), p);
        equalities += r.equality;
      } catch (const InconsistencyError& e) {
        return {false, e.what()};
      }
    }
  }
  return {true, std::to_string(mods.size()) + " modules, " + std::to_string(equalities) + " persistence cases with equality"};
}

Verdict c10() {
  const auto mods = corpus(10, 100);
  int worst_gap = -1 << 30;
  for (const auto& mod : mods) {
    const auto r = check_gotzmann_regularity(mod);
    if (!r.ok) return {false, "proxy " + std::to_string(r.reg_proxy) + " > s = " + r.s.str()};
    worst_gap = std::max(worst_gap, r.reg_proxy - static_cast<int>(r.s));
  }
  return {true, std::to_string(mods.size()) + " modules, max(proxy - s) = " + std::to_string(worst_gap)};
}

Verdict c11() {
  const RationalPoly p{2, 2};
  const auto e = quot_embedding(p, 1, 3);
  const auto e0 = quot_embedding_at(p, 1, 3, 0);
  const bool ok = e.s == 3 && e.current == GrassmannianParams{12, 8} && e.next.codim == 10 &&
                  e0.current == GrassmannianParams{3, 2} && e0.next.codim == 4 && expected_dim(3, 2, 0) == 2;
  return {ok, "s=3, Gr(12,8) next 10, Gr(3,2) next 4, expected dim 2"};
}

Verdict c12() {
  int cases = 0;
  for (int r = 2; r <= 6; ++r)
    for (int k = 1; k < r; ++k)
      for (int m = 0; m <= 6; ++m)
        for (int l = 0; l <= 10; ++l) {
          ++cases;
          const auto codim = porteous_codim_unsimplified(r, k, m, l);
          if (codim != porteous_codim(r, k, m, l) || porteous_grassmannian_dim(r, k, m, l) - codim != (r - k) * k + r * m)
            return {false, "fails at r,k,m,l = " + std::to_string(r) + "," + std::to_string(k) + "," + std::to_string(m) +
                               "," + std::to_string(l)};
        }
  return {true, std::to_string(cases) + " cases"};
}

Verdict c13() {
  for (int mc = 1; mc <= 6; ++mc)
    for (int ns = 0; ns <= 12; ++ns) {
      MinAutResult r;
      try {
        r = min_aut_dim(mc, ns, true);
      } catch (const InconsistencyError& e) {
        return {false, e.what()};
      }
      if (r.min != mc * mc || !r.unique) return {false, "min_aut_dim(" + std::to_string(mc) + "," + std::to_string(ns) + ")"};
    }
  int types = 0;
  std::vector<int> t;
  bool ok = true;
  std::string bad;
  std::function<void(std::size_t, int, int)> rec = [&](std::size_t len, int left, int cap) {
    if (t.size() == len) {
      ++types;
      const SplittingType st{t};
      const bool balanced = t.front() - t.back() <= 1;
      for (std::int64_t r = st.summands() + 1; r <= st.summands() + 4; ++r) {
        const auto got = hom_mod_aut_dim(st, r);
        const auto expected = expected_dim(r, r - st.summands(), st.degree_sum());
        if (got > expected || (got == expected) != balanced) {
          ok = false;
          bad = format_form(st.exponents());
        }
      }
      return;
    }
    for (int x = 0; x <= std::min(cap, left); ++x) {
      t.push_back(x);
      rec(len, left - x, x);
      t.pop_back();
    }
  };
  for (std::size_t len = 1; len <= 5; ++len) rec(len, 8, 8);
  return {ok, ok ? "min_aut over 78 pairs, " + std::to_string(types) + " splitting types" : "fails at " + bad};
}

Verdict c14() {
  const RationalPoly p{4, Rational(11, 3), 4, Rational(1, 3)};
  const auto c = chern_from_hp(p);
  const bool ok = c == ChernData{4, 16, 64} && c2_upper_bound(4) == 30 && c.c2 <= 30 && chi12_bound(4) == Rational(33, 4) &&
                  Rational(c.c2) > chi12_bound(4);
  return {ok, "(" + std::to_string(c.c1) + "," + std::to_string(c.c2) + "," + std::to_string(c.c3) + "), bound 30, chi12 " +
                  chi12_bound(4).str()};
}

Verdict c15() {
  int cases = 0, reps = 0;
  for (std::int64_t c1 = 0; c1 <= 6; ++c1) {
    const auto bound = c2_upper_bound(c1);
    for (std::int64_t c2 = -10; c2 <= bound + 10; ++c2)
      for (std::int64_t c3 = -10; c3 <= 10; ++c3) {
        ++cases;
        const auto p = hp_from_chern({c1, c2, c3});
        bool has_rep = true;
        try {
          gotzmann_rep(p);
        } catch (const NoGotzmannRepresentation&) {
          has_rep = false;
        } catch (const NotIntegerValued&) {
          has_rep = false;
        }
        reps += has_rep;
        if (c2 > bound && has_rep) return {false, "representation above the bound at c2 = " + std::to_string(c2)};
        if (c2 <= bound) {
          Rational residual = eval(p, 0) - 1 - Rational(c1 * (c1 + 1) * (c1 + 2), 6);
          for (std::int64_t j = c1 + 2; j <= c1 + bound - c2 + 1; ++j) residual += j;
          if (is_integer(residual) && residual >= 0 && !has_rep)
            return {false, "no representation at c1,c2,c3 = " + std::to_string(c1) + "," + std::to_string(c2) + "," +
                               std::to_string(c3)};
        }
      }
  }
  return {true, std::to_string(cases) + " Chern triples, " + std::to_string(reps) + " representable"};
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Verdict c16() {
  const std::vector<std::string> cases = {"gotzmann_number", "gotzmann_rep_nonexistent", "chern_from_hp"};
  for (const auto& name : cases) {
    const std::string base = std::string(GOLDEN_DIR) + "/" + name;
    std::vector<std::string> args;
    std::ifstream in(base + ".args");
    for (std::string line; std::getline(in, line);) args.push_back(line);
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    if (out.str() != slurp(base + ".json") || std::to_string(code) + "\n" != slurp(base + ".code"))
      return {false, name + " differs from its golden file"};
  }
  return {true, "3 golden documents"};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria = {
      {"macaulay worked example", c1},
      {"gotzmann worked example", c2},
      {"non-existence for P(d) = d", c3},
      {"binomial sum identity n = 0..10", c4},
      {"uniqueness round trip", c5},
      {"hilbert function built from a representation", c6},
      {"hilbert engine oracle equivalence", c7},
      {"representation of module hilbert polynomials", c8},
      {"growth bound and persistence", c9},
      {"gotzmann regularity (experimental)", c10},
      {"quot on P^1 example", c11},
      {"porteous identity", c12},
      {"automorphism minimum and hom - aut", c13},
      {"rank two chern example", c14},
      {"c2 bound decides representability", c15},
      {"cli golden files", c16},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = criteria[i].second();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    failed += !v.pass;
    std::printf("%s %2zu %-46s %s (%.2fs)\n", v.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), v.detail.c_str(), secs);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed ? 1 : 0;
}
