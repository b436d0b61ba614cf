// Text grammars for the CLI and the JSON form/element serializations.
//
//   fields:     Q | F5 | Q[i]/(i^2+1) | Q[t]/(t^2-2)   (towers allowed)
//   elements:   rational literals and polynomial expressions in the generator
//   poly maps:  components separated by ';' in variables x1..xn, '^' powers
//   GW:         15<1>+12<-1> | <2>+<-2> | h | 3h - <2>
//   MW:         eta^2*[a][b] + 3*[c] | eta*[-1] + 2
//   forms:      {"field":"Q","gram":[["2","0"],["0","-2"]]} | {"diag":[...]}
#pragma once

#include <cctype>
#include <string>
#include <vector>

#include <json.hpp>

#include "gwdeg/form.hpp"
#include "gwdeg/gw.hpp"
#include "gwdeg/mpoly.hpp"
#include "gwdeg/mw.hpp"

namespace gwdeg {

namespace detail {

struct Lexer {
  std::string src;
  size_t pos = 0;

  explicit Lexer(std::string s) : src(std::move(s)) {}

  void skip_ws() {
    while (pos < src.size() && std::isspace(static_cast<unsigned char>(src[pos]))) ++pos;
  }
  bool eof() {
    skip_ws();
    return pos >= src.size();
  }
  char peek() {
    skip_ws();
    return pos < src.size() ? src[pos] : '\0';
  }
  bool accept(char c) {
    if (peek() == c) {
      ++pos;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) fail(Errc::parse_error, std::string("expected '") + c + "' at offset " + std::to_string(pos));
  }
  bool next_is_ident() {
    char c = peek();
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
  }
  bool next_is_number() { return std::isdigit(static_cast<unsigned char>(peek())); }
  std::string ident() {
    skip_ws();
    if (!next_is_ident()) fail(Errc::parse_error, "expected an identifier at offset " + std::to_string(pos));
    size_t start = pos;
    while (pos < src.size() &&
           (std::isalnum(static_cast<unsigned char>(src[pos])) || src[pos] == '_'))
      ++pos;
    return src.substr(start, pos - start);
  }
  Int number() {
    skip_ws();
    if (!next_is_number()) fail(Errc::parse_error, "expected a number at offset " + std::to_string(pos));
    size_t start = pos;
    while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos]))) ++pos;
    return Int(src.substr(start, pos - start));
  }
  long small_number() {
    Int n = number();
    if (n > 1000000) fail(Errc::parse_error, "number too large");
    return n.convert_to<long>();
  }
  void done() {
    if (!eof()) fail(Errc::parse_error, "unexpected trailing input at offset " + std::to_string(pos));
  }
};

// Expression parser producing MPoly values. Element expressions are the
// nvars = 0 case; generator names of the coefficient field (anywhere in the
// tower) are resolved to constants.
class PolyParser {
public:
  PolyParser(FieldPtr k, std::vector<std::string> varnames, Lexer& lex)
      : k_(std::move(k)), vars_(std::move(varnames)), lex_(lex) {}

  MPoly expr() {
    bool neg = lex_.accept('-');
    MPoly acc = term();
    if (neg) acc = -acc;
    while (true) {
      if (lex_.accept('+'))
        acc = acc + term();
      else if (lex_.accept('-'))
        acc = acc - term();
      else
        break;
    }
    return acc;
  }

private:
  FieldPtr k_;
  std::vector<std::string> vars_;
  Lexer& lex_;

  int nvars() const { return static_cast<int>(vars_.size()); }

  MPoly term() {
    MPoly acc = factor();
    while (true) {
      if (lex_.accept('*')) {
        acc = acc * factor();
      } else if (lex_.accept('/')) {
        MPoly d = factor();
        if (d.is_zero()) fail(Errc::parse_error, "division by zero in expression");
        if (d.total_degree() > 0) fail(Errc::parse_error, "division by a non-constant");
        Element c = d.terms().begin()->second;
        acc = acc.scaled(c.inverse());
      } else {
        break;
      }
    }
    return acc;
  }

  MPoly factor() {
    MPoly base = primary();
    if (lex_.accept('^')) {
      long e = lex_.small_number();
      MPoly acc = MPoly::constant(k_, nvars(), k_->one());
      for (long i = 0; i < e; ++i) acc = acc * base;
      return acc;
    }
    return base;
  }

  MPoly primary() {
    if (lex_.accept('(')) {
      MPoly inner = expr();
      lex_.expect(')');
      return inner;
    }
    if (lex_.accept('-')) return -primary();
    if (lex_.next_is_number()) return MPoly::constant(k_, nvars(), k_->from_int(lex_.number()));
    if (lex_.next_is_ident()) {
      std::string name = lex_.ident();
      for (size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i] == name) return MPoly::variable(k_, nvars(), static_cast<int>(i));
      // generator of the coefficient field or a field on its tower
      for (FieldPtr f = k_; f->is_extension(); f = f->base()) {
        if (f->generator_name() == name)
          return MPoly::constant(k_, nvars(), embed_into(f->generator(), k_));
      }
      fail(Errc::parse_error, "unknown identifier '" + name + "'");
    }
    fail(Errc::parse_error, "unexpected input at offset " + std::to_string(lex_.pos));
  }
};

inline Element mpoly_as_element(const MPoly& p) { return p.eval({}); }

}  // namespace detail

/// Q | F<p> | base[g]/(minpoly), possibly iterated for towers.
inline FieldPtr parse_field(const std::string& s) {
  detail::Lexer lex(s);
  std::string base = lex.ident();
  FieldPtr k;
  if (base == "Q") {
    k = Field::rationals();
  } else if (base.size() > 1 && base[0] == 'F') {
    for (size_t i = 1; i < base.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(base[i])))
        fail(Errc::parse_error, "unknown field '" + base + "'");
    k = Field::prime_field(std::stoll(base.substr(1)));
  } else {
    fail(Errc::parse_error, "unknown field '" + base + "'");
  }
  while (lex.peek() == '[') {
    lex.expect('[');
    std::string gen = lex.ident();
    lex.expect(']');
    lex.expect('/');
    lex.expect('(');
    detail::PolyParser pp(k, {gen}, lex);
    MPoly m = pp.expr();
    lex.expect(')');
    int d = m.total_degree();
    if (d < 2) fail(Errc::parse_error, "minimal polynomial must have degree >= 2");
    std::vector<Element> coeffs(static_cast<size_t>(d + 1), k->zero());
    for (const auto& [mon, c] : m.terms()) coeffs[static_cast<size_t>(mon.e[0])] = c;
    k = Field::extension(k, std::move(coeffs), gen);
  }
  lex.done();
  return k;
}

inline Element parse_element(const FieldPtr& k, const std::string& s) {
  detail::Lexer lex(s);
  detail::PolyParser pp(k, {}, lex);
  MPoly p = pp.expr();
  lex.done();
  return detail::mpoly_as_element(p);
}

/// Components separated by ';' in variables x1..xn, n = number of components.
inline PolyMap parse_poly_map(const FieldPtr& k, const std::string& s) {
  std::vector<std::string> pieces;
  std::string cur;
  for (char c : s) {
    if (c == ';') {
      pieces.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  pieces.push_back(cur);
  int n = static_cast<int>(pieces.size());
  std::vector<std::string> vars;
  for (int i = 1; i <= n; ++i) vars.push_back("x" + std::to_string(i));
  std::vector<MPoly> comps;
  for (const auto& piece : pieces) {
    detail::Lexer lex(piece);
    detail::PolyParser pp(k, vars, lex);
    comps.push_back(pp.expr());
    lex.done();
  }
  return PolyMap(k, std::move(comps));
}

/// Comma-separated element expressions.
inline std::vector<Element> parse_point(const FieldPtr& k, const std::string& s) {
  std::vector<Element> out;
  std::string cur;
  std::vector<std::string> pieces;
  for (char c : s) {
    if (c == ',') {
      pieces.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  pieces.push_back(cur);
  for (const auto& piece : pieces) out.push_back(parse_element(k, piece));
  return out;
}

/// GW expressions: signed sum of [n][*]<expr> generators, h terms and bare
/// integers (n meaning n<1>).
inline GWElement parse_gw(const FieldPtr& k, const std::string& s) {
  detail::Lexer lex(s);
  GWElement acc = GWElement::zero(k);
  bool first = true;
  while (!lex.eof()) {
    long long sign = 1;
    if (lex.accept('-'))
      sign = -1;
    else if (lex.accept('+')) {
      if (first) fail(Errc::parse_error, "unexpected leading '+'");
    } else if (!first) {
      fail(Errc::parse_error, "expected '+' or '-' between terms");
    }
    long long mult = 1;
    bool have_mult = false;
    if (lex.next_is_number()) {
      mult = lex.small_number();
      have_mult = true;
      lex.accept('*');
    }
    if (lex.accept('<')) {
      detail::PolyParser pp(k, {}, lex);
      MPoly e = pp.expr();
      lex.expect('>');
      Element a = detail::mpoly_as_element(e);
      if (a.is_zero()) fail(Errc::parse_error, "generator <0> is not allowed");
      acc = acc + GWElement::generator(k, a).scaled(sign * mult);
    } else if (lex.next_is_ident()) {
      std::string id = lex.ident();
      if (id != "h") fail(Errc::parse_error, "unknown GW term '" + id + "'");
      acc = acc + hyperbolic(k, 1).scaled(sign * mult);
    } else if (have_mult) {
      // bare integer: mult copies of <1>
      acc = acc + GWElement::generator(k, k->one()).scaled(sign * mult);
    } else {
      fail(Errc::parse_error, "expected a GW term at offset " + std::to_string(lex.pos));
    }
    first = false;
  }
  if (first) fail(Errc::parse_error, "empty GW expression");
  return acc;
}

/// Diagonal entries of a form over any supported field, written GW-style:
/// <a> + <b> + ... (plain sums only).
inline std::vector<Element> parse_diagonal_form(const FieldPtr& k, const std::string& s) {
  detail::Lexer lex(s);
  std::vector<Element> out;
  bool first = true;
  while (!lex.eof()) {
    if (!first) lex.expect('+');
    long long mult = 1;
    if (lex.next_is_number()) {
      mult = lex.small_number();
      lex.accept('*');
    }
    lex.expect('<');
    detail::PolyParser pp(k, {}, lex);
    MPoly e = pp.expr();
    lex.expect('>');
    Element a = detail::mpoly_as_element(e);
    if (a.is_zero()) fail(Errc::parse_error, "generator <0> is not allowed");
    for (long long i = 0; i < mult; ++i) out.push_back(a);
    first = false;
  }
  if (out.empty()) fail(Errc::parse_error, "empty form");
  return out;
}

/// MW expressions: signed sum of [n*] eta[^e] and [expr] factors.
inline MWElement parse_mw(const FieldPtr& k, const std::string& s) {
  detail::Lexer lex(s);
  MWElement acc = MWElement::zero(k);
  bool first = true;
  while (!lex.eof()) {
    long long sign = 1;
    if (lex.accept('-'))
      sign = -1;
    else if (lex.accept('+')) {
      if (first) fail(Errc::parse_error, "unexpected leading '+'");
    } else if (!first) {
      fail(Errc::parse_error, "expected '+' or '-' between terms");
    }
    long long coeff = 1;
    bool have_coeff = false;
    if (lex.next_is_number()) {
      coeff = lex.small_number();
      have_coeff = true;
      lex.accept('*');
    }
    long eta = 0;
    std::vector<Element> syms;
    bool have_factor = false;
    while (true) {
      if (lex.next_is_ident()) {
        size_t save = lex.pos;
        std::string id = lex.ident();
        if (id != "eta") {
          lex.pos = save;
          break;
        }
        long e = 1;
        if (lex.accept('^')) e = lex.small_number();
        eta += e;
        have_factor = true;
        lex.accept('*');
      } else if (lex.peek() == '[') {
        lex.expect('[');
        detail::PolyParser pp(k, {}, lex);
        MPoly e = pp.expr();
        lex.expect(']');
        syms.push_back(detail::mpoly_as_element(e));
        have_factor = true;
      } else {
        break;
      }
    }
    if (!have_factor && !have_coeff)
      fail(Errc::parse_error, "expected an MW term at offset " + std::to_string(lex.pos));
    if (have_factor)
      acc = acc + MWElement::symbol(k, std::move(syms), eta, 1).scaled(sign * coeff);
    else
      acc = acc + MWElement::integer(k, sign * coeff);
    first = false;
  }
  if (first) fail(Errc::parse_error, "empty MW expression");
  return acc;
}

// --- JSON serialization ------------------------------------------------------

using nlohmann::json;

inline json gw_to_json(const GWElement& x) {
  json j;
  j["field"] = x.field()->name();
  json plus = json::array(), minus = json::array();
  for (const auto& e : x.plus_list()) plus.push_back(e.str());
  for (const auto& e : x.minus_list()) minus.push_back(e.str());
  j["plus"] = plus;
  j["minus"] = minus;
  return j;
}

inline GWElement parse_gw_json(const json& j, FieldPtr k = nullptr) {
  if (j.contains("field")) k = parse_field(j["field"].get<std::string>());
  if (!k) fail(Errc::parse_error, "GW JSON needs a field");
  GWElement x = GWElement::zero(k);
  for (const auto& e : j.value("plus", json::array()))
    x = x + GWElement::generator(k, parse_element(k, e.get<std::string>()));
  for (const auto& e : j.value("minus", json::array()))
    x = x - GWElement::generator(k, parse_element(k, e.get<std::string>()));
  return x;
}

inline json normal_form_to_json(const GWNormalForm& nf) {
  json j;
  j["rank"] = std::to_string(nf.rank);
  switch (nf.kind) {
    case GWNormalForm::Kind::complex_like:
      j["kind"] = "complex";
      break;
    case GWNormalForm::Kind::real_like:
      j["kind"] = "real";
      j["sig"] = std::to_string(nf.sig);
      break;
    case GWNormalForm::Kind::finite_field:
      j["kind"] = "finite";
      j["disc"] = nf.disc.str();
      break;
    case GWNormalForm::Kind::rationals: {
      j["kind"] = "rational";
      j["sig"] = std::to_string(nf.sig);
      j["disc"] = nf.disc.str();
      json h = json::object();
      for (const auto& [v, s] : nf.hasse) h[v.str()] = s;
      j["hasse"] = h;
      break;
    }
  }
  return j;
}

inline json form_to_json(const BilinearForm& f) {
  json j;
  j["field"] = f.field()->name();
  json rows = json::array();
  for (size_t i = 0; i < f.dim(); ++i) {
    json row = json::array();
    for (size_t c = 0; c < f.dim(); ++c) row.push_back(f.gram().at(i, c).str());
    rows.push_back(row);
  }
  j["gram"] = rows;
  return j;
}

inline BilinearForm parse_form_json(const json& j, FieldPtr k = nullptr) {
  if (j.contains("field")) k = parse_field(j["field"].get<std::string>());
  if (!k) fail(Errc::parse_error, "form JSON needs a field");
  if (j.contains("diag")) {
    std::vector<Element> d;
    for (const auto& e : j["diag"]) d.push_back(parse_element(k, e.get<std::string>()));
    return BilinearForm::diagonal(k, d);
  }
  if (!j.contains("gram")) fail(Errc::parse_error, "form JSON needs 'gram' or 'diag'");
  const auto& rows = j["gram"];
  size_t n = rows.size();
  Mat g(k, n, n);
  for (size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n) fail(Errc::parse_error, "gram matrix must be square");
    for (size_t c = 0; c < n; ++c) g.at(i, c) = parse_element(k, rows[i][c].get<std::string>());
  }
  return BilinearForm(k, std::move(g));
}

inline json mw_to_json(const MWElement& x) {
  json j;
  j["field"] = x.field()->name();
  if (x.grade()) j["grade"] = *x.grade();
  json terms = json::array();
  for (const auto& [m, c] : x.terms()) {
    json t;
    t["coeff"] = std::to_string(c);
    t["eta"] = m.eta;
    json syms = json::array();
    for (const auto& a : m.syms) syms.push_back(a.str());
    t["symbols"] = syms;
    terms.push_back(t);
  }
  j["terms"] = terms;
  return j;
}

}  // namespace gwdeg
