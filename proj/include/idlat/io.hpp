/* Copyright (C) 2026 The idlat Authors.
 * This program is Licensed under the Apache License, Version 2.0
 * (the "License"); you may not use this file except in compliance
 * with the License. You may obtain a copy of the License at
 *   http://www.apache.org/licenses/LICENSE-2.0
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License. See accompanying LICENSE file.
 */
#ifndef IDLAT_IO_HPP
#define IDLAT_IO_HPP

#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "cyclic.hpp"
#include "errors.hpp"
#include "lattice.hpp"
#include "poly.hpp"
#include "quotient.hpp"
#include "rational.hpp"
#include "smoothing.hpp"

namespace idlat::io {

using json = nlohmann::json;

// ---------------------------------------------------------------------------
// text forms

/// Parses a polynomial written as terms `c`, `x`, `x^k`, `c*x`, `c*x^k`
/// joined by + and -, e.g. "x^4 - 2*x + 1". Coefficients may be "p/q".
inline Poly parse_poly(std::string_view text)
{
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch)))
      s.push_back(ch);
  if (s.empty())
    throw ParseError("empty polynomial");

  QVector coeffs;
  auto add = [&](std::size_t k, const Rational& c) {
    if (coeffs.size() <= k)
      coeffs.resize(k + 1);
    coeffs[k] += c;
  };

  std::size_t i = 0;
  bool first = true;
  while (i < s.size()) {
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    } else if (!first) {
      throw ParseError("expected + or - at position " + std::to_string(i) + " in '" + s + "'");
    }
    first = false;
    std::size_t j = i;
    while (j < s.size() && s[j] != '+' && s[j] != '-')
      ++j;
    std::string term = s.substr(i, j - i);
    i = j;
    if (term.empty())
      throw ParseError("empty term in '" + s + "'");

    Rational c = 1;
    std::string var = term;
    auto star = term.find('*');
    if (star != std::string::npos) {
      c = parse_rational(term.substr(0, star));
      var = term.substr(star + 1);
      if (var.empty() || var[0] != 'x')
        throw ParseError("expected x after '*' in term '" + term + "'");
    } else if (term[0] != 'x') {
      add(0, sign * parse_rational(term));
      continue;
    }
    std::size_t k = 1;
    if (var.size() > 1) {
      if (var[1] != '^' || var.size() < 3)
        throw ParseError("bad power in term '" + term + "'");
      std::string ks = var.substr(2);
      if (!std::all_of(ks.begin(), ks.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); }))
        throw ParseError("bad exponent in term '" + term + "'");
      k = std::stoul(ks);
    }
    add(k, sign * c);
  }
  return Poly(std::move(coeffs));
}

/// Text form of phi to a validated quotient context.
inline QuotientContext parse_phi(std::string_view text) { return QuotientContext(parse_poly(text)); }

/// Comma-separated rationals, lowest coefficient first: "-2,1,0,0".
inline QVector parse_vector(std::string_view text)
{
  QVector v;
  std::size_t start = 0;
  while (true) {
    auto comma = text.find(',', start);
    v.push_back(parse_rational(text.substr(start, comma == std::string_view::npos ? text.npos : comma - start)));
    if (comma == std::string_view::npos)
      break;
    start = comma + 1;
  }
  return v;
}

inline std::string format_vector(const QVector& v)
{
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i)
      out += ",";
    out += to_string(v[i]);
  }
  return out;
}

// ---------------------------------------------------------------------------
// JSON values

inline Rational rational_from_json(const json& j)
{
  if (j.is_string())
    return parse_rational(j.get<std::string>());
  if (j.is_number_integer())
    return Rational(std::to_string(j.get<long long>()));
  if (j.is_number_float()) {
    double d = j.get<double>();
    auto r = rationalize(d);
    if (!r)
      throw IrrationalInput("value " + j.dump() + " is not a recognizable rational");
    return *r;
  }
  throw ParseError("expected a rational, got " + j.dump());
}

inline json to_json(const QVector& v)
{
  json a = json::array();
  for (const auto& q : v)
    a.push_back(to_string(q));
  return a;
}

inline QVector vector_from_json(const json& j)
{
  if (!j.is_array())
    throw ParseError("expected an array of rationals, got " + j.dump());
  QVector v;
  for (const auto& x : j)
    v.push_back(rational_from_json(x));
  return v;
}

inline json to_json(const Poly& p) { return to_json(p.coeffs()); }

inline Poly poly_from_json(const json& j)
{
  if (j.is_string())
    return parse_poly(j.get<std::string>());
  return Poly(vector_from_json(j));
}

/// Row-major array of "p/q" strings.
inline json to_json(const QMatrix& m)
{
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i)
    rows.push_back(to_json(m.row(i)));
  return rows;
}

inline QMatrix matrix_from_json(const json& j)
{
  if (!j.is_array())
    throw ParseError("expected a row-major matrix");
  std::vector<QVector> rows;
  for (const auto& r : j)
    rows.push_back(vector_from_json(r));
  return QMatrix::from_rows(rows);
}

/// { "n": int, "m": int, "basis": [[...] per column] }
inline json to_json(const LatticeBasis& L)
{
  json cols = json::array();
  for (const auto& c : L.columns())
    cols.push_back(to_json(c));
  return {{"n", L.n()}, {"m", L.m()}, {"basis", cols}};
}

inline LatticeBasis basis_from_json(const json& j)
{
  try {
    if (!j.is_object() || !j.contains("basis"))
      throw ParseError("basis file must be an object with a \"basis\" array");
    std::vector<QVector> cols;
    for (const auto& c : j.at("basis"))
      cols.push_back(vector_from_json(c));
    if (cols.empty())
      throw ParseError("basis has no columns");
    std::size_t n = cols.front().size();
    if (j.contains("n") && j.at("n").get<std::size_t>() != n)
      throw ParseError("basis columns have length " + std::to_string(n) + " but n = " + j.at("n").dump());
    if (j.contains("m") && j.at("m").get<std::size_t>() != cols.size())
      throw ParseError("basis has " + std::to_string(cols.size()) + " columns but m = " + j.at("m").dump());
    for (const auto& c : cols)
      if (c.size() != n)
        throw ParseError("basis columns have different lengths");
    return LatticeBasis::from_columns(cols);
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed basis JSON: ") + e.what());
  }
}

struct GeneratorsFile
{
  QuotientContext ctx;
  std::vector<RingElement> generators;
};

/// { "phi": [...] or "x^n-1", "generators": [[...], ...] }
inline json to_json(const GeneratorsFile& g)
{
  json gens = json::array();
  for (const auto& a : g.generators)
    gens.push_back(to_json(a.coeffs()));
  return {{"phi", to_json(g.ctx.phi())}, {"generators", gens}};
}

inline GeneratorsFile generators_from_json(const json& j)
{
  try {
    if (!j.is_object() || !j.contains("phi") || !j.contains("generators"))
      throw ParseError("generators file needs \"phi\" and \"generators\"");
    QuotientContext ctx(poly_from_json(j.at("phi")));
    std::vector<RingElement> gens;
    for (const auto& g : j.at("generators"))
      gens.emplace_back(ctx, vector_from_json(g));
    return {ctx, std::move(gens)};
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed generators JSON: ") + e.what());
  }
}

inline json to_json(const PrimeSpotCertificate& c)
{
  return {{"phi", to_json(c.g.context().phi())}, {"g", to_json(c.g.coeffs())},   {"u", to_json(c.u.coeffs())},
          {"tg", to_json(c.tg.coeffs())},        {"tg_values", c.tg_values},     {"tg_min", c.tg_min}};
}

inline PrimeSpotCertificate certificate_from_json(const json& j)
{
  try {
    QuotientContext ctx(poly_from_json(j.at("phi")));
    return {RingElement(ctx, vector_from_json(j.at("g"))), RingElement(ctx, vector_from_json(j.at("u"))),
            RingElement(ctx, vector_from_json(j.at("tg"))), j.at("tg_values").get<std::vector<double>>(),
            j.at("tg_min").get<double>()};
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed certificate JSON: ") + e.what());
  }
}

inline json to_json(const SmoothingReport& r)
{
  json j = {{"n", r.n},
            {"epsilon", r.epsilon},
            {"eta_numeric", r.eta_numeric},
            {"bound_lambda", r.bound_lambda},
            {"bound_tg", r.bound_tg ? json(*r.bound_tg) : json(nullptr)},
            {"bound_gs", r.bound_gs},
            {"tg_beats_gs", r.tg_beats_gs ? json(*r.tg_beats_gs) : json(nullptr)},
            {"truncation_radius", r.truncation_radius},
            {"certificate", r.certificate ? to_json(*r.certificate) : json(nullptr)}};
  return j;
}

inline SmoothingReport report_from_json(const json& j)
{
  try {
    SmoothingReport r{};
    r.n = j.at("n").get<std::size_t>();
    r.epsilon = j.at("epsilon").get<double>();
    r.eta_numeric = j.at("eta_numeric").get<double>();
    r.bound_lambda = j.at("bound_lambda").get<double>();
    if (!j.at("bound_tg").is_null())
      r.bound_tg = j.at("bound_tg").get<double>();
    r.bound_gs = j.at("bound_gs").get<double>();
    if (!j.at("tg_beats_gs").is_null())
      r.tg_beats_gs = j.at("tg_beats_gs").get<bool>();
    r.truncation_radius = j.at("truncation_radius").get<double>();
    if (!j.at("certificate").is_null())
      r.certificate = certificate_from_json(j.at("certificate"));
    return r;
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed report JSON: ") + e.what());
  }
}

// ---------------------------------------------------------------------------
// output

inline std::string format_double(double x)
{
  if (!std::isfinite(x))
    return "null";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

namespace detail {

inline void dump_into(std::string& out, const json& j, int indent, int depth)
{
  auto newline = [&](int d) {
    if (indent < 0)
      return;
    out += '\n';
    out.append(static_cast<std::size_t>(indent * d), ' ');
  };
  if (j.is_number_float()) {
    out += format_double(j.get<double>());
  } else if (j.is_object()) {
    if (j.empty()) {
      out += "{}";
      return;
    }
    out += '{';
    bool first = true;
    for (auto it = j.begin(); it != j.end(); ++it) {
      if (!first)
        out += ',';
      first = false;
      newline(depth + 1);
      out += json(it.key()).dump();
      out += indent < 0 ? ":" : ": ";
      dump_into(out, it.value(), indent, depth + 1);
    }
    newline(depth);
    out += '}';
  } else if (j.is_array()) {
    if (j.empty()) {
      out += "[]";
      return;
    }
    // scalar arrays stay on one line
    bool flat = std::all_of(j.begin(), j.end(), [](const json& x) { return x.is_primitive(); });
    out += '[';
    for (std::size_t i = 0; i < j.size(); ++i) {
      if (i)
        out += flat ? ", " : ",";
      if (!flat)
        newline(depth + 1);
      dump_into(out, j[i], indent, depth + 1);
    }
    if (!flat)
      newline(depth);
    out += ']';
  } else {
    out += j.dump();
  }
}

} // namespace detail

/// Like json::dump, but floating-point numbers carry 17 significant digits.
inline std::string dump(const json& j, int indent = 2)
{
  std::string out;
  detail::dump_into(out, j, indent, 0);
  return out;
}

/// Flattens a JSON object into "key<TAB>value" lines; nested keys are
/// joined with '.', arrays print comma-separated when scalar.
inline std::string to_tsv(const json& j, const std::string& prefix = "")
{
  std::string out;
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it)
      out += to_tsv(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key());
    return out;
  }
  std::string value;
  if (j.is_array() && std::all_of(j.begin(), j.end(), [](const json& x) { return x.is_primitive(); })) {
    for (std::size_t i = 0; i < j.size(); ++i) {
      if (i)
        value += ",";
      value += j[i].is_string() ? j[i].get<std::string>() : dump(j[i], -1);
    }
  } else if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i)
      out += to_tsv(j[i], prefix + "." + std::to_string(i));
    return out;
  } else if (j.is_string()) {
    value = j.get<std::string>();
  } else {
    value = dump(j, -1);
  }
  return out + (prefix.empty() ? "value" : prefix) + "\t" + value + "\n";
}

inline json read_json_file(const std::string& path)
{
  std::ifstream in(path);
  if (!in)
    throw ParseError("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError("'" + path + "' is not valid JSON: " + e.what());
  }
}

} // namespace idlat::io

#endif // IDLAT_IO_HPP
