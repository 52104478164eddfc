// Copyright 2026 The eqtoric Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// The eqtoric command line, kept in a header so tests can drive it in-process.
//
// Exit codes: 0 positive result, 1 negative decision (not isomorphic, not
// valid), 2 input or structural error.

#ifndef EQTORIC_TOOLS_CLI_HPP_
#define EQTORIC_TOOLS_CLI_HPP_

#include <exception>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "eqtoric/eqtoric.hpp"

namespace eqtoric::cli {

inline constexpr int kOk = 0;
inline constexpr int kNegative = 1;
inline constexpr int kError = 2;

namespace detail {

inline std::vector<long long> parse_int_list(const std::string& text, const std::string& flag) {
  std::vector<long long> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (item.empty() || used != item.size()) {
      throw ArgumentError(flag + ": '" + item + "' is not an integer");
    }
    out.push_back(v);
  }
  if (out.empty()) throw ArgumentError(flag + ": empty list");
  return out;
}

inline long long parse_int(const std::string& text, const std::string& what) {
  const auto v = parse_int_list(text, what);
  if (v.size() != 1) throw ArgumentError(what + ": expected a single integer");
  return v.front();
}

// Loads a fan and requires it to pass validation.
inline FanData load_valid(const std::string& path) {
  FanData fan = load_fan(path);
  const auto rep = validate(fan);
  if (!rep.valid()) {
    const auto& first = rep.issues.front();
    throw StructuralError(path + ": invalid fan, failed check '" + first.check + "': " + first.detail);
  }
  return fan;
}

}  // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact toolkit for toric and quasitoric manifolds given by fans", "eqtoric"};
  app.require_subcommand(1);

  std::string file, file2, cls, face, mode = "weak";
  bool strict_sphere = false, oracle = false, as_json = false, weak_quasitoric = false;
  std::vector<std::string> gen_args;

  auto* validate_cmd = app.add_subcommand("validate", "Validate a fan file");
  validate_cmd->add_option("fan", file, "Fan file")->required();
  validate_cmd->add_flag("--strict-sphere", strict_sphere,
                         "Also require the sphere conditions (Euler characteristic, vertex links)");

  auto* cohomology_cmd = app.add_subcommand("cohomology", "Print the equivariant cohomology presentation");
  cohomology_cmd->add_option("fan", file, "Fan file")->required();

  auto* zerolength_cmd = app.add_subcommand("zerolength", "Zero-length of a degree-2 class");
  zerolength_cmd->add_option("fan", file, "Fan file")->required();
  zerolength_cmd->add_option("--class", cls, "Coefficients a1,...,am of sum a_i t_i")->required();
  zerolength_cmd->add_flag("--oracle", oracle, "Cross-check against the annihilator-rank oracle");

  auto* fixed_cmd = app.add_subcommand("fixedpoints", "List torus-fixed points (maximal cones)");
  fixed_cmd->add_option("fan", file, "Fan file")->required();

  auto* iso_cmd = app.add_subcommand("iso", "Decide isomorphism of equivariant cohomology algebras");
  iso_cmd->add_option("fan", file, "First fan file")->required();
  iso_cmd->add_option("other", file2, "Second fan file")->required();
  iso_cmd->add_option("--mode", mode, "weak | strict | quasitoric | smallcover")
      ->check(CLI::IsMember({"weak", "strict", "quasitoric", "smallcover"}));
  iso_cmd->add_flag("--json", as_json, "Print the witness as JSON");
  iso_cmd->add_flag("--experimental-weak-quasitoric", weak_quasitoric,
                    "Allow weak mode on quasitoric pairs");

  auto* quotient_cmd = app.add_subcommand("quotient", "Kernel data of the quotient construction");
  quotient_cmd->add_option("fan", file, "Fan file")->required();

  auto* gen_cmd = app.add_subcommand(
      "gen", "Generate a fan: projective_space N | hirzebruch A | product F.json G.json");
  gen_cmd->add_option("args", gen_args, "Example name and parameters")->required();
  gen_cmd->allow_extras(false);

  auto* blowup_cmd = app.add_subcommand("blowup", "Blow up a fan along a cone");
  blowup_cmd->add_option("fan", file, "Fan file")->required();
  blowup_cmd->add_option("--face", face, "Comma-separated ray indices")->required();

  std::vector<std::string> argv_rev(args.rbegin(), args.rend());
  try {
    app.parse(argv_rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kError;
  }

  try {
    if (*validate_cmd) {
      const FanData fan = load_fan(file);
      ValidationOptions opts;
      opts.strict_sphere = strict_sphere;
      const auto rep = validate(fan, opts);
      if (rep.valid()) {
        out << "valid (" << mode_name(fan.mode) << ")\n";
        return kOk;
      }
      out << "invalid (" << mode_name(fan.mode) << ")\n";
      for (const auto& issue : rep.issues) out << "  [" << issue.check << "] " << issue.detail << '\n';
      return kNegative;
    }
    if (*cohomology_cmd) {
      out << render_presentation(presentation(detail::load_valid(file)));
      return kOk;
    }
    if (*zerolength_cmd) {
      const FanData fan = detail::load_valid(file);
      DegreeTwoClass xi;
      for (long long a : detail::parse_int_list(cls, "--class")) xi.coeffs.emplace_back(a);
      if (static_cast<int>(xi.coeffs.size()) != fan.m()) {
        throw ArgumentError("--class has " + std::to_string(xi.coeffs.size()) +
                            " coefficients, the fan has m=" + std::to_string(fan.m()) + " rays");
      }
      const std::size_t z = zero_length(fan, xi);
      out << z << '\n';
      if (oracle) {
        const std::size_t o = annihilator_rank_oracle(fan, xi);
        out << "oracle: " << o << '\n';
        if (o != z) {
          err << "error: zero-length " << z << " disagrees with annihilator-rank oracle " << o << '\n';
          return kError;
        }
      }
      return kOk;
    }
    if (*fixed_cmd) {
      for (const auto& p : fixed_points(detail::load_valid(file))) out << to_string(p.cone) << '\n';
      return kOk;
    }
    if (*iso_cmd) {
      const FanData a = detail::load_valid(file);
      const FanData b = detail::load_valid(file2);
      DecideOptions opts;
      opts.allow_weak_quasitoric = weak_quasitoric;
      const DecisionMode dm = parse_decision_mode(mode);
      const auto w = decide(a, b, dm, opts);
      if (!w) {
        out << "NOT ISOMORPHIC\n";
        return kNegative;
      }
      if (as_json) {
        out << render_witness_json(*w);
      } else {
        out << "ISOMORPHIC\n" << render_witness(*w);
      }
      if (w->uses_negative_sign()) err << "note: witness uses a negative sign (epsilon_i = -1)\n";
      return kOk;
    }
    if (*quotient_cmd) {
      out << render_kernel_data(kernel_data(detail::load_valid(file)));
      return kOk;
    }
    if (*gen_cmd) {
      const std::string& name = gen_args.front();
      FanData fan;
      if (name == "product") {
        if (gen_args.size() != 3) throw ArgumentError("gen product takes two fan files");
        fan = product(detail::load_valid(gen_args[1]), detail::load_valid(gen_args[2]));
      } else {
        std::vector<long long> params;
        for (std::size_t i = 1; i < gen_args.size(); ++i) params.push_back(detail::parse_int(gen_args[i], name));
        fan = standard_example(name, params);
      }
      out << render_fan(fan);
      return kOk;
    }
    if (*blowup_cmd) {
      const FanData fan = detail::load_valid(file);
      Face f;
      for (long long v : detail::parse_int_list(face, "--face")) {
        if (v < 1 || v > fan.m()) throw ArgumentError("--face: vertex " + std::to_string(v) + " out of range");
        f.push_back(static_cast<int>(v));
      }
      out << render_fan(blow_up(fan, f));
      return kOk;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kError;
  }
  return kError;
}

}  // namespace eqtoric::cli

#endif  // EQTORIC_TOOLS_CLI_HPP_
