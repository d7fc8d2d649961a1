#pragma once

// Batch front end. run() parses argv (without the program name), executes one
// computation, and writes either a human-readable line or one JSON document.
// Exit status: 0 success, 1 library error, 2 usage error.

#include <cstdint>
#include <cstdlib>
#include <functional>
#include <limits>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "gotzmann/chern.hpp"
#include "gotzmann/errors.hpp"
#include "gotzmann/gotzmann.hpp"
#include "gotzmann/io.hpp"
#include "gotzmann/macaulay.hpp"
#include "gotzmann/monomial.hpp"
#include "gotzmann/polyint.hpp"
#include "gotzmann/quotdim.hpp"

namespace gotzmann::cli {

struct Output {
  Json input = Json::object();
  Json result = Json::object();
  std::string text;
};

namespace detail {

inline Json poly_json(const RationalPoly& p) { return Json{{"coeffs", format_poly(p)}, {"human", to_string(p)}}; }

// Integers that fit in int64 are JSON numbers, larger ones decimal strings.
inline Json integer_json(const Integer& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
    return Json(static_cast<std::int64_t>(v));
  return Json(v.str());
}

inline constexpr std::size_t kExpandRepUpTo = 10000;

inline Json rep_json(const GotzmannRep& rep) {
  Json runs = Json::array();
  for (const auto& r : rep.runs) runs.push_back(Json{{"value", r.value}, {"count", integer_json(r.count)}});
  Json out{{"runs", runs}};
  if (rep.size() <= kExpandRepUpTo) out["sequence"] = rep.sequence();
  return out;
}

inline std::string join(const std::vector<std::int64_t>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? " " : "") + std::to_string(v[i]);
  return out;
}

inline std::int64_t brute_force_cap() {
  if (const char* env = std::getenv("GOTZMANN_BRUTE_FORCE_CAP")) return std::atoll(env);
  return 60;
}

}  // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Gotzmann representations, Hilbert functions, Quot-scheme dimensions and Chern bounds", "gotzmann"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "Emit one JSON document instead of text");

  std::string command;
  std::function<void(Output&)> action;
  auto bind = [&](CLI::App* sub, std::string name, std::function<void(Output&)> fn) {
    sub->callback([&command, &action, name = std::move(name), fn = std::move(fn)] {
      command = name;
      action = fn;
    });
  };

  // macaulay
  auto* mac = app.add_subcommand("macaulay", "Macaulay representations and transforms")->require_subcommand(1);
  std::int64_t mac_a = 0;
  int mac_d = 1;
  for (const std::string which : {"rep", "transform"}) {
    auto* sub = mac->add_subcommand(which, which == "rep" ? "d-th Macaulay representation of A" : "A^<D>");
    sub->add_option("A", mac_a)->required();
    sub->add_option("D", mac_d)->required();
    bind(sub, "macaulay " + which, [&, which](Output& o) {
      o.input = Json{{"a", mac_a}, {"d", mac_d}};
      if (which == "rep") {
        const auto rep = macaulay_rep(mac_a, mac_d);
        Json tops = Json::array(), bottoms = Json::array();
        std::string text = std::to_string(mac_a) + " =";
        for (std::size_t i = 0; i < rep.tops.size(); ++i) {
          const auto bottom = mac_d - static_cast<int>(i);
          tops.push_back(rep.tops[i]);
          bottoms.push_back(bottom);
          text += (i ? " + binom(" : " binom(") + std::to_string(rep.tops[i]) + "," + std::to_string(bottom) + ")";
        }
        if (rep.tops.empty()) text += " 0";
        o.result = Json{{"tops", tops}, {"bottoms", bottoms}};
        o.text = text;
      } else {
        const auto t = macaulay_transform(mac_a, mac_d);
        o.result = Json{{"transform", t}};
        o.text = std::to_string(t);
      }
    });
  }

  // gotzmann
  auto* gz = app.add_subcommand("gotzmann", "Gotzmann representations of Hilbert polynomials")->require_subcommand(1);
  std::string gz_poly;
  std::int64_t gz_upto = 10;
  {
    auto* rep = gz->add_subcommand("rep", "Gotzmann representation of POLY");
    rep->add_option("POLY", gz_poly, "Coefficients, constant first, e.g. 2,3 for 3d+2")->required();
    bind(rep, "gotzmann rep", [&](Output& o) {
      o.input = Json{{"poly", gz_poly}};
      const auto r = gotzmann_rep(parse_poly(gz_poly));
      o.result = Json{{"rep", detail::rep_json(r)}, {"gotzmann_number", detail::integer_json(r.size())}};
      o.text = format_rep(r);
    });
    auto* num = gz->add_subcommand("number", "Gotzmann number of POLY");
    num->add_option("POLY", gz_poly)->required();
    bind(num, "gotzmann number", [&](Output& o) {
      o.input = Json{{"poly", gz_poly}};
      const auto s = gotzmann_number(parse_poly(gz_poly));
      o.result = Json{{"gotzmann_number", detail::integer_json(s)}};
      o.text = s.str();
    });
    auto* hf = gz->add_subcommand("hf", "Hilbert function built from the representation of POLY");
    hf->add_option("POLY", gz_poly)->required();
    hf->add_option("--upto", gz_upto, "Last degree")->check(CLI::NonNegativeNumber);
    bind(hf, "gotzmann hf", [&](Output& o) {
      o.input = Json{{"poly", gz_poly}, {"upto", gz_upto}};
      const auto r = gotzmann_rep(parse_poly(gz_poly));
      const auto values = gotzmann_hilbert_values(r, gz_upto);
      o.result = Json{{"gotzmann_number", detail::integer_json(r.size())}, {"values", values}};
      o.text = detail::join(values);
    });
  }

  // module commands
  std::string module_path;
  auto* hilb = app.add_subcommand("hilbert", "Hilbert polynomial or function of F/N for a module file");
  hilb->add_option("MODULE_FILE", module_path)->required();
  bool want_poly = false;
  std::vector<std::int64_t> hf_range;
  auto* poly_flag = hilb->add_flag("--polynomial", want_poly, "Hilbert polynomial (default)");
  hilb->add_option("--function", hf_range, "Hilbert function on degrees D0..D1")->expected(2)->excludes(poly_flag);
  bind(hilb, "hilbert", [&](Output& o) {
    o.input = Json{{"module_file", module_path}};
    const auto mod = load_module(module_path);
    o.input["module"] = module_to_json(mod);
    if (!hf_range.empty()) {
      std::vector<std::int64_t> values;
      for (auto d = hf_range[0]; d <= hf_range[1]; ++d) values.push_back(hf_enumerate(mod, d));
      o.result = Json{{"function", Json{{"from", hf_range[0]}, {"to", hf_range[1]}, {"values", values}}}};
      o.text = detail::join(values);
    } else {
      const auto p = hilbert_polynomial(mod);
      o.result = Json{{"hilbert_polynomial", detail::poly_json(p)}};
      o.text = to_string(p);
    }
  });

  auto* lex = app.add_subcommand("lexify", "Componentwise lexsegment module with the same Hilbert function");
  lex->add_option("MODULE_FILE", module_path)->required();
  bind(lex, "lexify", [&](Output& o) {
    o.input = Json{{"module_file", module_path}};
    const auto mod = load_module(module_path);
    o.input["module"] = module_to_json(mod);
    const auto lexed = lexify(mod);
    o.result = Json{{"module", module_to_json(lexed)}};
    o.text = module_to_json(lexed).dump();
  });

  auto* reg = app.add_subcommand("regcheck", "Gotzmann number vs. saturated-lex regularity of F/N");
  reg->add_option("MODULE_FILE", module_path)->required();
  bind(reg, "regcheck", [&](Output& o) {
    o.input = Json{{"module_file", module_path}};
    const auto mod = load_module(module_path);
    o.input["module"] = module_to_json(mod);
    const auto r = check_gotzmann_regularity(mod);
    o.result = Json{{"hilbert_polynomial", detail::poly_json(r.hilbert_polynomial)},
                    {"gotzmann_number", detail::integer_json(r.s)},
                    {"reg_proxy", r.reg_proxy},
                    {"ok", r.ok}};
    o.text = "s=" + r.s.str() + " reg_proxy=" + std::to_string(r.reg_proxy) + " ok=" + (r.ok ? "true" : "false");
  });

  // quot
  auto* quot = app.add_subcommand("quot", "Quot-scheme dimension data")->require_subcommand(1);
  std::int64_t q_k = 1, q_m = 0, q_r = 1, q_mcount = 1, q_nsum = 0;
  int q_n = 1;
  int q_degree = -1;
  std::string q_poly;
  {
    auto* p1 = quot->add_subcommand("p1", "Gotzmann number of k(d+1)+m on P^1");
    p1->add_option("K", q_k)->required();
    p1->add_option("M", q_m)->required();
    bind(p1, "quot p1", [&](Output& o) {
      o.input = Json{{"k", q_k}, {"m", q_m}};
      const auto s = gotzmann_number_p1(q_k, q_m);
      const RationalPoly p({Rational(q_k + q_m), Rational(q_k)});
      o.result = Json{{"hilbert_polynomial", detail::poly_json(p)},
                      {"gotzmann_number", s},
                      {"general_algorithm", detail::integer_json(gotzmann_number(p))}};
      o.text = std::to_string(s);
    });
    auto* embed = quot->add_subcommand("embed", "Grassmannian data for Quot_P(O^R) on P^N");
    embed->add_option("POLY", q_poly)->required();
    embed->add_option("N", q_n)->required();
    embed->add_option("R", q_r)->required();
    embed->add_option("--degree", q_degree, "Degree of the graded pieces (default: the Gotzmann number)");
    bind(embed, "quot embed", [&](Output& o) {
      o.input = Json{{"poly", q_poly}, {"n", q_n}, {"r", q_r}};
      if (q_degree >= 0) o.input["degree"] = q_degree;
      const auto p = parse_poly(q_poly);
      const auto e = q_degree >= 0 ? quot_embedding_at(p, q_n, q_r, q_degree) : quot_embedding(p, q_n, q_r);
      o.result = Json{{"gotzmann_number", detail::integer_json(e.s)},
                      {"degree", e.degree},
                      {"grassmannian", Json{{"ambient_dim", e.current.ambient_dim}, {"codim", e.current.codim}}},
                      {"next", Json{{"ambient_dim", e.next.ambient_dim}, {"codim", e.next.codim}}}};
      o.text = "s=" + e.s.str() + " Gr(" + std::to_string(e.current.ambient_dim) + "," +
               std::to_string(e.current.codim) + ") next codim " + std::to_string(e.next.codim) + " in " +
               std::to_string(e.next.ambient_dim);
    });
    auto* lemma = quot->add_subcommand("lemma", "Minimum of dim Aut over exponent forms");
    lemma->add_option("MCOUNT", q_mcount)->required();
    lemma->add_option("NSUM", q_nsum)->required();
    bind(lemma, "quot lemma", [&](Output& o) {
      o.input = Json{{"m_count", q_mcount}, {"n_sum", q_nsum}};
      const bool verify = q_nsum <= detail::brute_force_cap();
      const auto r = min_aut_dim(q_mcount, q_nsum, verify);
      Json argmin = Json::object();
      for (const auto& [i, c] : r.argmin) argmin[std::to_string(i)] = c;
      o.result = Json{{"min", r.min}, {"argmin", argmin}, {"unique", r.unique}, {"verified_by_enumeration", verify}};
      o.text = "min=" + std::to_string(r.min) + " argmin=" + format_form(r.argmin);
    });
  }

  // chern
  auto* ch = app.add_subcommand("chern", "Rank-2 Chern data on P^3")->require_subcommand(1);
  std::string ch_poly;
  std::int64_t c1 = 0, c2 = 0, c3 = 0;
  {
    auto* from = ch->add_subcommand("from-hp", "Chern classes of a Hilbert polynomial and the c2 bounds");
    from->add_option("POLY", ch_poly)->required();
    bind(from, "chern from-hp", [&](Output& o) {
      o.input = Json{{"poly", ch_poly}};
      const auto p = parse_poly(ch_poly);
      const auto dec = decompose_p3_rank2(p);
      const auto& c = dec.chern;
      const bool bound_ok = c.c1 >= 0 && c.c2 <= c2_upper_bound(c.c1);
      o.result = Json{{"c1", c.c1}, {"c2", c.c2}, {"c3", c.c3}};
      o.result["c1_nonneg"] = c.c1 >= 0;
      o.result["c2_upper_bound"] = c.c1 >= 0 ? Json(c2_upper_bound(c.c1)) : Json(nullptr);
      o.result["bound_ok"] = bound_ok;
      std::string chi_text = "n/a";
      if (c.c1 >= 4) {
        const auto chi = chi12_bound(c.c1);
        o.result["chi12_bound"] = chi.str();
        o.result["chi12_ok"] = Rational(c.c2) <= chi;
        chi_text = Rational(c.c2) <= chi ? "true" : "false";
      } else {
        o.result["chi12_bound"] = nullptr;
        o.result["chi12_ok"] = nullptr;
      }
      o.result["p2_terms"] = dec.p2_terms;
      o.result["linear_coeff"] = dec.linear_coeff.str();
      o.result["constant_residual"] = dec.constant_residual.str();
      o.text = "c1=" + std::to_string(c.c1) + " c2=" + std::to_string(c.c2) + " c3=" + std::to_string(c.c3) +
               " bound_ok=" + (bound_ok ? "true" : "false") + " chi12_ok=" + chi_text;
    });
    auto* to = ch->add_subcommand("to-hp", "Hilbert polynomial of Chern data (c1, c2, c3)");
    to->add_option("C1", c1)->required();
    to->add_option("C2", c2)->required();
    to->add_option("C3", c3)->required();
    bind(to, "chern to-hp", [&](Output& o) {
      o.input = Json{{"c1", c1}, {"c2", c2}, {"c3", c3}};
      const auto p = hp_from_chern({c1, c2, c3});
      o.result = Json{{"hilbert_polynomial", detail::poly_json(p)}};
      o.text = to_string(p);
    });
    auto* bounds = ch->add_subcommand("bounds", "c2 bounds for a given c1");
    bounds->add_option("C1", c1)->required();
    bind(bounds, "chern bounds", [&](Output& o) {
      o.input = Json{{"c1", c1}};
      const auto ub = c2_upper_bound(c1);
      o.result = Json{{"c2_upper_bound", ub}};
      o.result["chi12_bound"] = c1 >= 4 ? Json(chi12_bound(c1).str()) : Json(nullptr);
      o.text = "c2_upper_bound=" + std::to_string(ub) +
               " chi12_bound=" + (c1 >= 4 ? chi12_bound(c1).str() : std::string("n/a"));
    });
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  Output o;
  auto emit_error = [&](std::string_view kind, const std::string& message) {
    err << "error: " << kind << ": " << message << "\n";
    if (json) {
      Json doc{{"command", command}, {"input", o.input}, {"error", Json{{"kind", kind}, {"message", message}}}};
      out << doc.dump(2) << "\n";
    }
    return 1;
  };
  try {
    action(o);
  } catch (const Error& e) {
    return emit_error(e.kind(), e.what());
  } catch (const std::exception& e) {
    return emit_error("InternalError", e.what());
  }
  if (json) {
    Json doc{{"command", command}, {"input", o.input}, {"result", o.result}};
    out << doc.dump(2) << "\n";
  } else {
    out << o.text << "\n";
  }
  return 0;
}

}  // namespace gotzmann::cli
