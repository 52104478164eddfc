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

#include "eqtoric/fan.hpp"

#include <random>
#include <string>

#include <gtest/gtest.h>

#include "test_support.hpp"

namespace eqtoric {
namespace {

std::string describe(const ValidationReport& rep) {
  std::string s;
  for (const auto& i : rep.issues) s += "[" + i.check + "] " + i.detail + "\n";
  return s;
}

TEST(Validate, ProjectivePlaneIsValid) {
  const auto rep = validate(projective_space(2));
  EXPECT_TRUE(rep.valid()) << describe(rep);
}

TEST(Validate, MissingConeFailsCompleteness) {
  FanData fan = projective_space(2);
  fan.complex = SimplicialComplex(3, {{1, 2}, {2, 3}});
  const auto rep = validate(fan);
  EXPECT_FALSE(rep.valid());
  EXPECT_TRUE(rep.failed("pseudomanifold")) << describe(rep);
  EXPECT_FALSE(rep.failed("nonsingular"));
}

TEST(Validate, QuasitoricSquare) {
  const FanData q = testing::quasitoric_square();
  const auto as_quasi = validate(q);
  EXPECT_TRUE(as_quasi.valid()) << describe(as_quasi);

  FanData t = q;
  t.mode = FanMode::kToric;
  const auto as_toric = validate(t);
  EXPECT_FALSE(as_toric.valid());
  EXPECT_FALSE(as_toric.failed("nonsingular"));
  EXPECT_TRUE(as_toric.failed("overlap")) << describe(as_toric);
}

TEST(Validate, SingularConeReported) {
  const FanData fan{2, {make_vector({1, 0}), make_vector({1, 2}), make_vector({-1, -1})},
                    simplex_boundary(2), FanMode::kToric};
  const auto rep = validate(fan);
  EXPECT_TRUE(rep.failed("nonsingular")) << describe(rep);
}

TEST(Validate, StructuralProblemsStopEarly) {
  const FanData fan{2, {make_vector({2, 2}), make_vector({0, 1}), make_vector({-1, -1})},
                    simplex_boundary(2), FanMode::kToric};
  const auto rep = validate(fan);
  ASSERT_FALSE(rep.valid());
  for (const auto& i : rep.issues) EXPECT_EQ(i.check, "structure");
  EXPECT_THROW(make_fan(fan.n, fan.rays, fan.complex), StructuralError);
}

TEST(Validate, DoubleCoveringFanIsRejected) {
  // Every cone unimodular and every wall locally fine, but the cones wind
  // twice around the origin.
  std::vector<IntVector> rays;
  for (int lap = 0; lap < 2; ++lap)
    for (auto v : {make_vector({1, 0}), make_vector({0, 1}), make_vector({-1, 0}), make_vector({0, -1})})
      rays.push_back(v);
  const FanData fan{2, rays, cycle(8), FanMode::kToric};
  const auto rep = validate(fan);
  EXPECT_FALSE(rep.failed("nonsingular"));
  EXPECT_FALSE(rep.failed("wall"));
  EXPECT_TRUE(rep.failed("overlap")) << describe(rep);
}

TEST(Validate, SmallCoverModeWorksModTwo) {
  EXPECT_TRUE(validate(testing::smallcover_triangle()).valid());
  const FanData even{2, {make_vector({1, 0}), make_vector({1, 0}), make_vector({0, 1})},
                     simplex_boundary(2), FanMode::kSmallCover};
  EXPECT_TRUE(validate(even).failed("nonsingular"));
  const FanData big{2, {make_vector({2, 1}), make_vector({0, 1}), make_vector({1, 1})},
                    simplex_boundary(2), FanMode::kSmallCover};
  EXPECT_TRUE(validate(big).failed("structure"));
}

TEST(Validate, BuiltinsAndBlowUpChains) {
  std::mt19937_64 rng(21);
  std::vector<FanData> bases = {projective_space(1), projective_space(2), projective_space(3),
                                product(projective_space(1), projective_space(2))};
  for (int a = -3; a <= 3; ++a) bases.push_back(hirzebruch(a));
  ValidationOptions strict;
  strict.strict_sphere = true;
  for (const auto& base : bases) {
    for (int depth = 0; depth <= 5; ++depth) {
      const FanData fan = testing::random_blowups(rng, base, depth);
      const auto rep = validate(fan, strict);
      ASSERT_TRUE(rep.valid()) << describe(rep) << "m=" << fan.m();
      for (const auto& f : fan.complex.maximal_faces()) EXPECT_EQ(abs(det(cone_matrix(fan, f))), 1);
      EXPECT_EQ(fixed_points(fan).size(), fan.complex.maximal_faces().size());
    }
  }
}

TEST(FixedPoints, Counts) {
  EXPECT_EQ(fixed_points(projective_space(2)).size(), 3u);
  for (int a = -2; a <= 2; ++a) EXPECT_EQ(fixed_points(hirzebruch(a)).size(), 4u);
  for (int n = 1; n <= 5; ++n) EXPECT_EQ(fixed_points(projective_space(n)).size(), static_cast<std::size_t>(n + 1));
  const auto pts = fixed_points(projective_space(2));
  EXPECT_EQ(pts.front().cone, (Face{1, 2}));
  EXPECT_EQ(pts.back().cone, (Face{2, 3}));
}

TEST(BlowUp, ProjectivePlaneAtAPoint) {
  const FanData b = blow_up(projective_space(2), {1, 2});
  EXPECT_EQ(b.m(), 4);
  EXPECT_EQ(b.ray(4), make_vector({1, 1}));
  EXPECT_EQ(b.ray(3), make_vector({-1, -1}));
  EXPECT_TRUE(validate(b).valid());
  EXPECT_EQ(fixed_points(b).size(), 3u + 2u - 1u);
}

TEST(BlowUp, FixedPointCountFollowsStellarCombinatorics) {
  const FanData cp3 = projective_space(3);
  // {1,2} lies in two maximal cones of the 3-simplex boundary.
  EXPECT_EQ(fixed_points(blow_up(cp3, {1, 2})).size(), 4u + 2u * (2u - 1u));
  EXPECT_EQ(fixed_points(blow_up(cp3, {1, 2, 3})).size(), 4u + 3u - 1u);
}

TEST(BlowUp, Errors) {
  EXPECT_THROW(blow_up(projective_space(2), {1}), ArgumentError);
  EXPECT_THROW(blow_up(hirzebruch(1), {1, 3}), ArgumentError);
  EXPECT_THROW(blow_up(testing::quasitoric_square(), {1, 2}), ArgumentError);
  EXPECT_THROW(blow_up(projective_space(2), {1, 5}), ArgumentError);
}

TEST(StandardExamples, Shapes) {
  const FanData p1 = projective_space(1);
  EXPECT_EQ(p1.rays, (std::vector<IntVector>{make_vector({1}), make_vector({-1})}));
  EXPECT_EQ(p1.complex.maximal_faces(), (std::vector<Face>{{1}, {2}}));

  const FanData h = hirzebruch(3);
  EXPECT_EQ(h.ray(3), make_vector({-1, 3}));
  EXPECT_EQ(h.complex, cycle(4));

  const FanData prod = product(projective_space(1), projective_space(1));
  EXPECT_EQ(prod.m(), 4);
  EXPECT_EQ(prod.n, 2);
  EXPECT_TRUE(validate(prod).valid());
  EXPECT_EQ(minimal_nonfaces(prod.complex), (std::vector<Face>{{1, 2}, {3, 4}}));

  EXPECT_EQ(standard_example("hirzebruch", {2}), hirzebruch(2));
  EXPECT_EQ(standard_example("projective_space", {3}), projective_space(3));
  EXPECT_THROW(standard_example("grassmannian", {2}), ArgumentError);
  EXPECT_THROW(standard_example("hirzebruch", {}), ArgumentError);
  EXPECT_THROW(projective_space(0), ArgumentError);
}

}  // namespace
}  // namespace eqtoric
