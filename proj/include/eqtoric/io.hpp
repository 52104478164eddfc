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

// The fan file: a JSON object with exactly the keys
//
//   "mode"       "toric" | "quasitoric" | "smallcover"
//   "n"          rank of the torus
//   "m"          number of rays
//   "rays"       m integer lists of length n; ray i is the i-th entry
//   "max_cones"  lists of 1-indexed ray indices
//
// Ray order is meaningful (it fixes the vertex labels) and is preserved;
// cones are canonicalized. render_fan writes the canonical form, so
// parse_fan(render_fan(f)) == f and render_fan(parse_fan(t)) is idempotent.

#ifndef EQTORIC_IO_HPP_
#define EQTORIC_IO_HPP_

#include <algorithm>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "eqtoric/complex.hpp"
#include "eqtoric/error.hpp"
#include "eqtoric/fan.hpp"
#include "eqtoric/lattice.hpp"

namespace eqtoric {

namespace detail {

inline int line_of_byte(std::string_view text, std::size_t byte) {
  const std::size_t end = std::min(byte == 0 ? 0 : byte - 1, text.size());
  return 1 + static_cast<int>(std::count(text.begin(), text.begin() + end, '\n'));
}

inline long long json_integer(const nlohmann::json& j, const std::string& where) {
  if (!j.is_number_integer()) throw ParseError(where + " must be an integer", 0);
  if (j.is_number_unsigned() && j.get<unsigned long long>() > 9223372036854775807ULL) {
    throw ParseError(where + " is out of range", 0);
  }
  return j.get<long long>();
}

}  // namespace detail

// Parses and checks the structural invariants (shapes, ranges, duplicate
// cones, primitive rays, 0/1 small-cover rays, purity). Geometric validity
// is a separate step: see validate().
inline FanData parse_fan(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what(),
                     detail::line_of_byte(text, e.byte));
  }
  if (!doc.is_object()) throw ParseError("fan document must be a JSON object", 0);
  static constexpr std::string_view kKeys[] = {"mode", "n", "m", "rays", "max_cones"};
  for (const auto& [key, value] : doc.items()) {
    if (std::find(std::begin(kKeys), std::end(kKeys), key) == std::end(kKeys)) {
      throw ParseError("unknown key \"" + key + "\"", 0);
    }
  }
  for (auto key : kKeys)
    if (!doc.contains(std::string(key))) throw ParseError("missing key \"" + std::string(key) + "\"", 0);

  if (!doc["mode"].is_string()) throw ParseError("\"mode\" must be a string", 0);
  FanMode mode;
  try {
    mode = parse_mode(doc["mode"].get<std::string>());
  } catch (const ArgumentError& e) {
    throw ParseError(e.what(), 0);
  }
  const long long n = detail::json_integer(doc["n"], "\"n\"");
  const long long m = detail::json_integer(doc["m"], "\"m\"");
  if (n < 1) throw StructuralError("n must be positive");
  if (m < 1 || m > kMaxVertices) throw StructuralError("m must lie in [1, 64]");

  const auto& rays_json = doc["rays"];
  if (!rays_json.is_array()) throw ParseError("\"rays\" must be a list", 0);
  if (static_cast<long long>(rays_json.size()) != m) {
    throw StructuralError("\"m\" is " + std::to_string(m) + " but " +
                          std::to_string(rays_json.size()) + " rays are given");
  }
  std::vector<IntVector> rays;
  for (std::size_t i = 0; i < rays_json.size(); ++i) {
    const std::string where = "ray " + std::to_string(i + 1);
    if (!rays_json[i].is_array()) throw ParseError(where + " must be a list", 0);
    if (static_cast<long long>(rays_json[i].size()) != n) {
      throw StructuralError(where + " has length " + std::to_string(rays_json[i].size()) +
                            ", expected n=" + std::to_string(n));
    }
    IntVector v;
    for (const auto& x : rays_json[i]) v.emplace_back(detail::json_integer(x, where + " entry"));
    rays.push_back(std::move(v));
  }

  const auto& cones_json = doc["max_cones"];
  if (!cones_json.is_array()) throw ParseError("\"max_cones\" must be a list", 0);
  std::vector<Face> cones;
  for (std::size_t c = 0; c < cones_json.size(); ++c) {
    const std::string where = "max cone " + std::to_string(c + 1);
    if (!cones_json[c].is_array()) throw ParseError(where + " must be a list", 0);
    Face f;
    for (const auto& x : cones_json[c]) {
      const long long v = detail::json_integer(x, where + " entry");
      if (v < 1 || v > m) {
        throw StructuralError(where + ": vertex index " + std::to_string(v) + " outside [1," +
                              std::to_string(m) + "]");
      }
      f.push_back(static_cast<int>(v));
    }
    cones.push_back(std::move(f));
  }
  return make_fan(static_cast<int>(n), std::move(rays),
                  SimplicialComplex(static_cast<int>(m), std::move(cones)), mode);
}

inline std::string render_fan(const FanData& fan) {
  auto list = [](const auto& xs) {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? ", " : "") << xs[i];
    os << ']';
    return os.str();
  };
  std::ostringstream os;
  os << "{\n";
  os << "  \"mode\": \"" << mode_name(fan.mode) << "\",\n";
  os << "  \"n\": " << fan.n << ",\n";
  os << "  \"m\": " << fan.m() << ",\n";
  os << "  \"rays\": [";
  for (std::size_t i = 0; i < fan.rays.size(); ++i) os << (i ? ", " : "") << list(fan.rays[i]);
  os << "],\n";
  os << "  \"max_cones\": [";
  const auto& cones = fan.complex.maximal_faces();
  for (std::size_t i = 0; i < cones.size(); ++i) os << (i ? ", " : "") << list(cones[i]);
  os << "]\n}\n";
  return os.str();
}

inline std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

inline FanData load_fan(const std::string& path) { return parse_fan(read_text_file(path)); }

}  // namespace eqtoric

#endif  // EQTORIC_IO_HPP_
