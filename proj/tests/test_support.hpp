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

// Shared fixtures for the unit and acceptance suites: the fan corpus,
// random generators, and the scrambling used for round-trip trials.

#ifndef EQTORIC_TESTS_TEST_SUPPORT_HPP_
#define EQTORIC_TESTS_TEST_SUPPORT_HPP_

#include <algorithm>
#include <numeric>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "eqtoric/eqtoric.hpp"

namespace eqtoric::testing {

struct NamedFan {
  std::string name;
  FanData fan;
};

// CP^1, CP^2, CP^3, hirzebruch(0..3) and three blow-ups.
inline std::vector<NamedFan> fan_corpus() {
  std::vector<NamedFan> out;
  for (int n = 1; n <= 3; ++n) out.push_back({"CP" + std::to_string(n), projective_space(n)});
  for (int a = 0; a <= 3; ++a) out.push_back({"H" + std::to_string(a), hirzebruch(a)});
  out.push_back({"Bl_{1,2} CP2", blow_up(projective_space(2), {1, 2})});
  out.push_back({"Bl_{1,2} CP3", blow_up(projective_space(3), {1, 2})});
  out.push_back({"Bl_{1,2,3} CP3", blow_up(projective_space(3), {1, 2, 3})});
  return out;
}

// The (4-cycle; (1,0),(0,1),(1,2),(0,-1)) characteristic pair.
inline FanData quasitoric_square() {
  return make_fan(2, {make_vector({1, 0}), make_vector({0, 1}), make_vector({1, 2}), make_vector({0, -1})},
                  cycle(4), FanMode::kQuasitoric);
}

// The mod-2 triangle ((1,0),(0,1),(1,1)) over the boundary of the 2-simplex.
inline FanData smallcover_triangle() {
  return make_fan(2, {make_vector({1, 0}), make_vector({0, 1}), make_vector({1, 1})},
                  simplex_boundary(2), FanMode::kSmallCover);
}

inline DegreeTwoClass random_class(std::mt19937_64& rng, int m, int bound = 5) {
  std::uniform_int_distribution<int> dist(-bound, bound);
  DegreeTwoClass xi{IntVector(m)};
  for (auto& a : xi.coeffs) a = dist(rng);
  return xi;
}

// Product of up to `steps` elementary matrices (row additions with
// coefficient +-1, sign flips, swaps); always in GL(n, Z).
inline IntMatrix random_unimodular(std::mt19937_64& rng, int n, int steps = 10) {
  IntMatrix a = IntMatrix::identity(n);
  std::uniform_int_distribution<int> kind(0, 2), idx(0, n - 1), len(0, steps);
  const int k = len(rng);
  for (int s = 0; s < k; ++s) {
    const int i = idx(rng);
    const int j = idx(rng);
    switch (kind(rng)) {
      case 0:
        if (i != j) a.add_row(i, j, (rng() & 1) ? 1 : -1);
        break;
      case 1:
        a.negate_row(i);
        break;
      default:
        a.swap_rows(i, j);
        break;
    }
  }
  return a;
}

inline VertexMap random_permutation(std::mt19937_64& rng, int m) {
  std::vector<int> p(m);
  std::iota(p.begin(), p.end(), 1);
  std::shuffle(p.begin(), p.end(), rng);
  return VertexMap(std::move(p));
}

// The fan with rays v'_{rho(i)} = A v_i and complex rho(Sigma).
inline FanData scramble(const FanData& fan, const VertexMap& rho, const IntMatrix& a) {
  std::vector<IntVector> rays(fan.m());
  for (int i = 1; i <= fan.m(); ++i) rays[rho(i) - 1] = a * fan.ray(i);
  std::vector<Face> cones;
  for (const auto& f : fan.complex.maximal_faces()) cones.push_back(rho.apply(f));
  return make_fan(fan.n, std::move(rays), SimplicialComplex(fan.m(), std::move(cones)), fan.mode);
}

// Blow up along random faces of size >= 2, `depth` times.
inline FanData random_blowups(std::mt19937_64& rng, FanData fan, int depth) {
  if (fan.n < 2) return fan;
  for (int d = 0; d < depth; ++d) {
    const auto& cones = fan.complex.maximal_faces();
    const Face& cone = cones[rng() % cones.size()];
    Face f;
    while (f.size() < 2) {
      f.clear();
      for (int v : cone)
        if (rng() & 1) f.push_back(v);
    }
    fan = blow_up(fan, f);
  }
  return fan;
}

}  // namespace eqtoric::testing

#endif  // EQTORIC_TESTS_TEST_SUPPORT_HPP_
