// Command-line front end.
//
//   gwdeg gw normalize|invariants|equals   GW arithmetic and normal forms
//   gwdeg degree local|global              A1-degrees of polynomial maps
//   gwdeg mw residue|to-gw|realize-real    Milnor-Witt symbol calculus
//   gwdeg transfer                         trace transfers GW(L) -> GW(K)
//
// Payloads given as "-" are read from stdin. --json switches to the JSON
// schema documented in the README; identical invocations produce byte
// identical output. Exit codes: 0 ok, 2 parse/input, 3 unsupported field,
// 4 not zero-dimensional, 5 unsupported fiber point, 6 characteristic | dim,
// 7 grade mismatch, 8 rewrite limit, 9 inseparable/not an extension.

#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "gwdeg/degree.hpp"
#include "gwdeg/parse.hpp"

using namespace gwdeg;

namespace {

int exit_code_of(Errc c) {
  switch (c) {
    case Errc::parse_error:
    case Errc::division_by_zero:
    case Errc::descriptor_mismatch:
    case Errc::degenerate_form:
    case Errc::zero_input:
    case Errc::zero_symbol:
    case Errc::zero_functional:
    case Errc::degenerate_result:
      return 2;
    case Errc::unsupported_field:
    case Errc::unsupported_n:
      return 3;
    case Errc::not_zero_dimensional:
    case Errc::unit_ideal:
      return 4;
    case Errc::unsupported_fiber_point:
    case Errc::not_a_zero:
    case Errc::not_etale:
    case Errc::zero_jacobian_class:
      return 5;
    case Errc::char_divides_dim:
      return 6;
    case Errc::grade_mismatch:
      return 7;
    case Errc::rewrite_limit_exceeded:
      return 8;
    case Errc::inseparable_residue_field:
    case Errc::not_an_extension:
      return 9;
  }
  return 1;
}

std::string slurp_if_stdin(const std::string& arg) {
  if (arg != "-") return arg;
  std::ostringstream ss;
  ss << std::cin.rdbuf();
  std::string s = ss.str();
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
  return s;
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

struct GwArgs {
  std::string field = "Q";
  std::string payload, payload2;
  bool as_json = false;
};

struct DegreeArgs {
  std::string field = "Q";
  std::string map, point, value;
  bool as_json = false;
  bool verbose = false;
};

struct MwArgs {
  std::string field = "Q";
  std::string expr;
  long long prime = 0;
  bool as_json = false;
};

struct TransferArgs {
  std::string from, to;
  std::string payload;
  bool as_json = false;
  bool verbose = false;
};

json invariants_json(const GWElement& x) { return normal_form_to_json(gw_normal_form(x)); }

void run_gw_normalize(const GwArgs& a) {
  auto k = parse_field(a.field);
  GWElement x = parse_gw(k, slurp_if_stdin(a.payload));
  if (a.as_json) {
    json j = gw_to_json(x);
    j["invariants"] = invariants_json(x);
    emit(j);
  } else {
    std::cout << gw_to_string(x) << "\n";
  }
}

void run_gw_invariants(const GwArgs& a) {
  auto k = parse_field(a.field);
  GWElement x = parse_gw(k, slurp_if_stdin(a.payload));
  if (a.as_json) {
    json j;
    j["field"] = k->name();
    j["invariants"] = invariants_json(x);
    emit(j);
  } else {
    std::cout << gw_normal_form(x).str() << "\n";
  }
}

void run_gw_equals(const GwArgs& a) {
  auto k = parse_field(a.field);
  GWElement x = parse_gw(k, slurp_if_stdin(a.payload));
  GWElement y = parse_gw(k, slurp_if_stdin(a.payload2));
  bool eq = gw_equals(x, y);
  if (a.as_json)
    emit(json{{"equal", eq}});
  else
    std::cout << (eq ? "true" : "false") << "\n";
}

void print_degree_text(const std::string& label, const GWElement& d) {
  std::cout << label << " = " << gw_to_string(d) << "\n";
  std::cout << gw_normal_form(d).str() << "\n";
}

void run_degree_local(const DegreeArgs& a) {
  auto k = parse_field(a.field);
  PolyMap f = parse_poly_map(k, slurp_if_stdin(a.map));
  auto p = parse_point(k, a.point);
  EKLInfo info;
  GWElement d = local_degree(f, p, &info);
  if (a.as_json) {
    json j;
    j["field"] = k->name();
    j["degree"] = gw_to_json(d);
    j["invariants"] = invariants_json(d);
    if (a.verbose) {
      j["eta"] = json{{"basis_index", info.eta_index}, {"scale", info.eta_scale.str()}};
    }
    emit(j);
  } else {
    print_degree_text("local degree", d);
    if (a.verbose)
      std::cout << "eta: dual functional of basis element " << info.eta_index << ", scale "
                << info.eta_scale.str() << "\n";
  }
}

void run_degree_global(const DegreeArgs& a) {
  auto k = parse_field(a.field);
  PolyMap f = parse_poly_map(k, slurp_if_stdin(a.map));
  auto y = parse_point(k, a.value);
  std::vector<FiberPoint> pts;
  GWElement d = global_degree(f, y, &pts);
  if (a.as_json) {
    json j;
    j["field"] = k->name();
    j["degree"] = gw_to_json(d);
    j["invariants"] = invariants_json(d);
    json fiber = json::array();
    for (const auto& fp : pts) {
      json e;
      e["type"] = fp.rational ? "rational" : "closed";
      json coords = json::array();
      for (const auto& c : fp.coords) coords.push_back(c.str());
      e["point"] = coords;
      e["multiplicity"] = fp.multiplicity;
      if (!fp.rational) e["minpoly"] = fp.generator_minpoly.str("t");
      e["degree"] = gw_to_json(fp.degree);
      fiber.push_back(e);
    }
    j["fiber"] = fiber;
    emit(j);
  } else {
    print_degree_text("global degree", d);
    std::cout << "fiber points:\n";
    for (const auto& fp : pts) {
      if (fp.rational) {
        std::cout << "  point (";
        for (size_t i = 0; i < fp.coords.size(); ++i)
          std::cout << (i ? ", " : "") << fp.coords[i].str();
        std::cout << "), multiplicity " << fp.multiplicity << ": " << gw_to_string(fp.degree) << "\n";
      } else {
        std::cout << "  closed point, minpoly " << fp.generator_minpoly.str("t") << ", degree "
                  << fp.multiplicity << ": " << gw_to_string(fp.degree) << "\n";
      }
    }
  }
}

void run_mw_residue(const MwArgs& a) {
  auto q = Field::rationals();
  MWElement x = parse_mw(q, slurp_if_stdin(a.expr));
  if (a.prime == 0) fail(Errc::parse_error, "residue needs --prime");
  MWElement r = residue(x, a.prime);
  if (a.as_json)
    emit(mw_to_json(r));
  else
    std::cout << r.str() << "\n";
}

void run_mw_to_gw(const MwArgs& a) {
  auto k = parse_field(a.field);
  MWElement x = parse_mw(k, slurp_if_stdin(a.expr));
  GWElement g = degree0_to_gw(x);
  if (a.as_json) {
    json j = gw_to_json(g);
    j["invariants"] = invariants_json(g);
    emit(j);
  } else {
    std::cout << gw_to_string(g) << "\n";
  }
}

void run_mw_realize_real(const MwArgs& a) {
  auto q = Field::rationals();
  MWElement x = parse_mw(q, slurp_if_stdin(a.expr));
  long long v = real_realization(x);
  if (a.as_json)
    emit(json{{"value", std::to_string(v)}});
  else
    std::cout << v << "\n";
}

void run_transfer(const TransferArgs& a) {
  auto L = parse_field(a.from);
  auto K = parse_field(a.to);
  auto entries = parse_diagonal_form(L, slurp_if_stdin(a.payload));
  BilinearForm beta = BilinearForm::diagonal(L, entries);
  std::vector<BilinearForm> steps;
  BilinearForm cur = beta;
  while (!same_field(cur.field(), K)) {
    if (!cur.field()->is_extension())
      fail(Errc::not_an_extension, "target field is not below the source field");
    cur = trace_transfer_step(cur);
    steps.push_back(cur);
  }
  GWElement g = gw_from_form(cur);
  if (a.as_json) {
    json j = gw_to_json(g);
    j["invariants"] = invariants_json(g);
    if (a.verbose && !steps.empty()) {
      json grams = json::array();
      for (const auto& s : steps) grams.push_back(form_to_json(s));
      j["grams"] = grams;
    }
    emit(j);
  } else {
    if (a.verbose) {
      for (const auto& s : steps) {
        std::cout << "gram over " << s.field()->name() << ":\n";
        for (size_t i = 0; i < s.dim(); ++i) {
          std::cout << "  [";
          for (size_t c = 0; c < s.dim(); ++c) std::cout << (c ? ", " : "") << s.gram().at(i, c).str();
          std::cout << "]\n";
        }
      }
    }
    std::cout << gw_to_string(g) << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Grothendieck-Witt arithmetic and A1-degrees"};
  app.require_subcommand(1);

  GwArgs gw_args;
  auto* gw = app.add_subcommand("gw", "Grothendieck-Witt ring operations");
  gw->require_subcommand(1);
  auto add_gw_common = [&](CLI::App* sub, bool two_payloads) {
    sub->add_option("--field", gw_args.field, "field descriptor")->capture_default_str();
    sub->add_flag("--json", gw_args.as_json, "JSON output");
    sub->add_option("payload", gw_args.payload, "GW expression")->required();
    if (two_payloads) sub->add_option("payload2", gw_args.payload2, "second GW expression")->required();
  };
  auto* gw_norm = gw->add_subcommand("normalize", "reduced diagonal representative");
  add_gw_common(gw_norm, false);
  auto* gw_inv = gw->add_subcommand("invariants", "rank / signature / discriminant / Hasse symbols");
  add_gw_common(gw_inv, false);
  auto* gw_eq = gw->add_subcommand("equals", "decide equality in GW(k)");
  add_gw_common(gw_eq, true);

  DegreeArgs deg_args;
  auto* deg = app.add_subcommand("degree", "A1-degrees of polynomial maps");
  deg->require_subcommand(1);
  auto* deg_local = deg->add_subcommand("local", "local degree at a rational zero");
  deg_local->add_option("--field", deg_args.field, "field descriptor")->capture_default_str();
  deg_local->add_option("--map", deg_args.map, "polynomial map, components ';'-separated")->required();
  deg_local->add_option("--point", deg_args.point, "rational point")->required();
  deg_local->add_flag("--json", deg_args.as_json, "JSON output");
  deg_local->add_flag("--verbose", deg_args.verbose, "show the eta choice");
  auto* deg_global = deg->add_subcommand("global", "global degree over a rational value");
  deg_global->add_option("--field", deg_args.field, "field descriptor")->capture_default_str();
  deg_global->add_option("--map", deg_args.map, "polynomial map, components ';'-separated")->required();
  deg_global->add_option("--value", deg_args.value, "rational value y")->required();
  deg_global->add_flag("--json", deg_args.as_json, "JSON output");
  deg_global->add_flag("--verbose", deg_args.verbose, "verbose output");

  MwArgs mw_args;
  auto* mw = app.add_subcommand("mw", "Milnor-Witt K-theory");
  mw->require_subcommand(1);
  auto* mw_res = mw->add_subcommand("residue", "residue map at a p-adic valuation");
  mw_res->add_option("--prime", mw_args.prime, "odd prime p")->required();
  mw_res->add_flag("--json", mw_args.as_json, "JSON output");
  mw_res->add_option("expr", mw_args.expr, "MW expression over Q")->required();
  auto* mw_togw = mw->add_subcommand("to-gw", "grade-0 identification with GW");
  mw_togw->add_option("--field", mw_args.field, "field descriptor")->capture_default_str();
  mw_togw->add_flag("--json", mw_args.as_json, "JSON output");
  mw_togw->add_option("expr", mw_args.expr, "grade-0 MW expression")->required();
  auto* mw_real = mw->add_subcommand("realize-real", "real realization");
  mw_real->add_flag("--json", mw_args.as_json, "JSON output");
  mw_real->add_option("expr", mw_args.expr, "MW expression over Q")->required();

  TransferArgs tr_args;
  auto* tr = app.add_subcommand("transfer", "trace transfer GW(L) -> GW(K)");
  tr->add_option("--from", tr_args.from, "source field L")->required();
  tr->add_option("--to", tr_args.to, "target field K")->required();
  tr->add_flag("--json", tr_args.as_json, "JSON output");
  tr->add_flag("--verbose", tr_args.verbose, "show intermediate Gram matrices");
  tr->add_option("payload", tr_args.payload, "diagonal form over L, e.g. \"<1> + <t>\"")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (gw_norm->parsed()) run_gw_normalize(gw_args);
    else if (gw_inv->parsed()) run_gw_invariants(gw_args);
    else if (gw_eq->parsed()) run_gw_equals(gw_args);
    else if (deg_local->parsed()) run_degree_local(deg_args);
    else if (deg_global->parsed()) run_degree_global(deg_args);
    else if (mw_res->parsed()) run_mw_residue(mw_args);
    else if (mw_togw->parsed()) run_mw_to_gw(mw_args);
    else if (mw_real->parsed()) run_mw_realize_real(mw_args);
    else if (tr->parsed()) run_transfer(tr_args);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << " [" << errc_name(e.code()) << "]\n";
    return exit_code_of(e.code());
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
