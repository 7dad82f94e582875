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
#ifndef IDLAT_TOOLS_CLI_HPP
#define IDLAT_TOOLS_CLI_HPP

#include <cstdint>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <idlat/idlat.hpp>
#include <idlat/io.hpp>

#include "verify.hpp"

namespace idlat::tools {

enum ExitCode : int
{
  kOk = 0,
  kDomainError = 1,
  kInputError = 2,
};

namespace detail {

struct Emitter
{
  std::string format = "json";
  std::string out_path;
  std::ostream& out;

  void emit(const io::json& j) const
  {
    std::string text = format == "tsv" ? io::to_tsv(j) : io::dump(j) + "\n";
    if (out_path.empty()) {
      out << text;
      return;
    }
    std::ofstream f(out_path);
    if (!f)
      throw ParseError("cannot write '" + out_path + "'");
    f << text;
  }
};

inline RingElement element_from_flag(const QuotientContext& ctx, const std::string& text)
{
  return RingElement(ctx, io::parse_vector(text));
}

} // namespace detail

/// Runs one CLI invocation. Returns 0 on success, 1 on domain errors
/// (a mathematical precondition failed), 2 on usage, I/O and parse errors.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
  CLI::App app{"idlat: ideal matrices, cyclic lattices and smoothing-parameter bounds"};
  app.require_subcommand(1);
  std::string format = "json";
  std::string out_path;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "tsv"}));
  app.add_option("--out", out_path, "Write the artifact to this path instead of stdout");

  std::string phi_text, vec_text, basis_path, gens_path, center_text;
  std::optional<double> epsilon;
  double width = 0;
  std::uint64_t seed = 0;
  std::size_t count = 1;

  auto* im = app.add_subcommand("ideal-matrix", "H*(f), its determinant and inverse");
  im->add_option("--phi", phi_text, "Monic integer modulus, e.g. \"x^3-1\"")->required();
  im->add_option("--f", vec_text, "Coefficients of f, lowest first, comma-separated")->required();

  auto* ps = app.add_subcommand("prime-spot", "Test gcd(g, phi) = 1 and emit the certificate (u, T_g)");
  ps->add_option("--phi", phi_text)->required();
  ps->add_option("--g", vec_text)->required();

  auto* cc = app.add_subcommand("cyclic-check", "Is the lattice closed under the rotation H?");
  cc->add_option("--phi", phi_text)->required();
  cc->add_option("--basis", basis_path, "Basis JSON file")->required();

  auto* ml = app.add_subcommand("module-lattice", "Basis of L(H*(a_1)) + ... + L(H*(a_m))");
  ml->add_option("--generators", gens_path, "Generators JSON file")->required();

  auto* eta = app.add_subcommand("eta", "Numeric smoothing parameter and its three upper bounds");
  eta->add_option("--basis", basis_path)->required();
  eta->add_option("--phi", phi_text, "Needed with --g");
  eta->add_option("--g", vec_text, "A prime spot in the lattice (phi = x^n - 1)");
  eta->add_option("--epsilon", epsilon, "Default 2^-n");

  auto* sm = app.add_subcommand("sample", "Exact discrete Gaussian samples");
  sm->add_option("--basis", basis_path)->required();
  sm->add_option("--s", width, "Gaussian width")->required()->check(CLI::PositiveNumber);
  sm->add_option("--center", center_text, "Center, comma-separated (default 0)");
  sm->add_option("--seed", seed)->required();
  sm->add_option("--count", count)->check(CLI::Range(std::size_t{1}, std::size_t{10'000'000}));

  auto* vf = app.add_subcommand("verify", "Replay the worked examples and the property suites");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kInputError;
  }

  detail::Emitter emitter{format, out_path, out};
  try {
    if (*im) {
      QuotientContext ctx = io::parse_phi(phi_text);
      RingElement f = detail::element_from_flag(ctx, vec_text);
      IdealMatrix m = ideal_matrix(f);
      IdealDeterminant det = ideal_det(f);
      io::json j = {{"phi", io::to_json(ctx.phi())}, {"f", io::to_json(f.coeffs())},
                    {"matrix", io::to_json(m.entries())}, {"det", to_string(det.exact)},
                    {"det_spectral", det.spectral}};
      try {
        j["inverse"] = io::to_json(ideal_inverse(f).entries());
      } catch (const NotCoprime&) {
        j["inverse"] = nullptr;
      }
      emitter.emit(j);
    } else if (*ps) {
      QuotientContext ctx = io::parse_phi(phi_text);
      emitter.emit(io::to_json(is_prime_spot(detail::element_from_flag(ctx, vec_text))));
    } else if (*cc) {
      QuotientContext ctx = io::parse_phi(phi_text);
      LatticeBasis L = io::basis_from_json(io::read_json_file(basis_path));
      emitter.emit({{"cyclic", is_cyclic(L, ctx)}});
    } else if (*ml) {
      auto gf = io::generators_from_json(io::read_json_file(gens_path));
      emitter.emit(io::to_json(module_to_lattice(gf.generators).basis));
    } else if (*eta) {
      LatticeBasis L = io::basis_from_json(io::read_json_file(basis_path));
      std::optional<RingElement> g;
      if (!vec_text.empty()) {
        if (phi_text.empty())
          throw ParseError("--g needs --phi");
        g = detail::element_from_flag(io::parse_phi(phi_text), vec_text);
      }
      emitter.emit(io::to_json(smoothing_report(L, g, epsilon)));
    } else if (*sm) {
      LatticeBasis L = io::basis_from_json(io::read_json_file(basis_path));
      QVector c = center_text.empty() ? QVector(L.n()) : io::parse_vector(center_text);
      auto samples = discrete_gauss_sample(L, {width, c}, seed, count);
      io::json arr = io::json::array();
      for (const auto& v : samples)
        arr.push_back(io::to_json(v));
      emitter.emit({{"s", width}, {"center", io::to_json(c)}, {"seed", seed}, {"samples", arr}});
    } else if (*vf) {
      std::ostringstream log;
      bool ok = Verifier(log).run();
      out << log.str();
      return ok ? kOk : kDomainError;
    }
  } catch (const ParseError& e) {
    err << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << "\n";
    return kDomainError;
  }
  return kOk;
}

} // namespace idlat::tools

#endif // IDLAT_TOOLS_CLI_HPP
