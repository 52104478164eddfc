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

#include "eqtoric/lattice.hpp"

#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "test_support.hpp"

namespace eqtoric {
namespace {

// Laplace expansion along the first row; independent of Bareiss.
long long cofactor_det(const std::vector<std::vector<long long>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  long long total = 0;
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<std::vector<long long>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<long long> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(m[r][k]);
      minor.push_back(row);
    }
    total += (c % 2 ? -1 : 1) * m[0][c] * cofactor_det(minor);
  }
  return total;
}

std::vector<std::vector<long long>> random_small(std::mt19937_64& rng, std::size_t r, std::size_t c,
                                                 int bound) {
  std::uniform_int_distribution<int> d(-bound, bound);
  std::vector<std::vector<long long>> m(r, std::vector<long long>(c));
  for (auto& row : m)
    for (auto& x : row) x = d(rng);
  return m;
}

IntMatrix to_matrix(const std::vector<std::vector<long long>>& m) {
  std::vector<IntVector> rows;
  for (const auto& r : m) {
    IntVector v;
    for (long long x : r) v.emplace_back(x);
    rows.push_back(v);
  }
  return IntMatrix::from_rows(rows);
}

TEST(Det, Examples) {
  EXPECT_EQ(det(IntMatrix::identity(2)), 1);
  EXPECT_EQ(det(IntMatrix::from_rows({{0, -1}, {1, -1}})), 1);
  EXPECT_EQ(det(IntMatrix::from_rows({{2, 0}, {0, 2}})), 4);
  EXPECT_EQ(det(IntMatrix::from_rows({{0, 1}, {1, 0}})), -1);
  EXPECT_EQ(det(IntMatrix::from_rows({{1, 2}, {2, 4}})), 0);
}

TEST(Det, RejectsNonSquare) {
  EXPECT_THROW(det(IntMatrix(2, 3)), ArgumentError);
}

TEST(Det, AgreesWithCofactorExpansion) {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + trial % 5;
    const auto m = random_small(rng, n, n, 4);
    EXPECT_EQ(det(to_matrix(m)), cofactor_det(m));
  }
}

TEST(Det, IsMultiplicative) {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + trial % 4;
    const IntMatrix a = to_matrix(random_small(rng, n, n, 5));
    const IntMatrix b = to_matrix(random_small(rng, n, n, 5));
    EXPECT_EQ(det(a * b), det(a) * det(b));
  }
}

TEST(Rank, MatchesSmithRank) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const IntMatrix a = to_matrix(random_small(rng, 1 + trial % 4, 1 + (trial / 4) % 5, 2));
    EXPECT_EQ(rank(a), smith_normal_form(a).rank());
  }
  EXPECT_EQ(rank(IntMatrix::from_rows({{1, 2, 3}, {2, 4, 6}})), 1u);
}

TEST(Adjugate, TimesMatrixIsDeterminant) {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + trial % 4;
    const IntMatrix a = to_matrix(random_small(rng, n, n, 5));
    IntMatrix expected = IntMatrix::identity(n);
    const Integer d = det(a);
    for (std::size_t i = 0; i < n; ++i) expected(i, i) = d;
    EXPECT_EQ(adjugate(a) * a, expected);
  }
}

TEST(Smith, Examples) {
  EXPECT_EQ(smith_normal_form(IntMatrix(2, 2)).diag, (std::vector<Integer>{0, 0}));
  EXPECT_EQ(smith_normal_form(IntMatrix::from_rows({{1, 0, -1}, {0, 1, -1}})).diag,
            (std::vector<Integer>{1, 1}));
  EXPECT_EQ(smith_normal_form(IntMatrix::from_rows({{2}})).diag, (std::vector<Integer>{2}));
  EXPECT_EQ(smith_normal_form(IntMatrix::from_rows({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}})).diag,
            (std::vector<Integer>{2, 6, 12}));
}

TEST(Smith, DecompositionInvariantsOnRandomMatrices) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t r = 1 + trial % 4;
    const std::size_t c = 1 + (trial / 4) % 5;
    const IntMatrix m = to_matrix(random_small(rng, r, c, 6));
    const auto snf = smith_normal_form(m);
    ASSERT_EQ(snf.left * m * snf.right, snf.diagonal_matrix()) << m.to_string();
    EXPECT_EQ(abs(det(snf.left)), 1);
    EXPECT_EQ(abs(det(snf.right)), 1);
    for (std::size_t k = 0; k < snf.diag.size(); ++k) {
      EXPECT_GE(snf.diag[k], 0);
      if (k + 1 < snf.diag.size()) {
        if (snf.diag[k] == 0) {
          EXPECT_EQ(snf.diag[k + 1], 0);
        } else {
          EXPECT_EQ(snf.diag[k + 1] % snf.diag[k], 0);
        }
      }
    }
  }
}

TEST(Hermite, InvariantUnderUnimodularRowOperations) {
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t r = 1 + trial % 3;
    const std::size_t c = 2 + trial % 4;
    const IntMatrix m = to_matrix(random_small(rng, r, c, 5));
    const IntMatrix u = testing::random_unimodular(rng, static_cast<int>(r));
    EXPECT_EQ(hermite_normal_form(u * m), hermite_normal_form(m));
  }
}

TEST(Hermite, ReducedEchelonShape) {
  const IntMatrix h = hermite_normal_form(IntMatrix::from_rows({{2, 3}, {4, 5}, {0, 0}}));
  EXPECT_EQ(h, IntMatrix::from_rows({{2, 0}, {0, 1}}));
  EXPECT_EQ(hermite_normal_form(IntMatrix::from_rows({{-1, -1, -1}})), IntMatrix::from_rows({{1, 1, 1}}));
}

TEST(SolveBasisMap, Examples) {
  const auto e1 = make_vector({1, 0});
  const auto e2 = make_vector({0, 1});
  EXPECT_EQ(*solve_basis_map({e1, e2}, {e1, e2}), IntMatrix::identity(2));
  EXPECT_EQ(*solve_basis_map({e1, e2}, {e1, make_vector({0, -1})}), IntMatrix::from_rows({{1, 0}, {0, -1}}));
  EXPECT_EQ(*solve_basis_map({e1, e2}, {make_vector({-1, 1}), make_vector({0, 1})}),
            IntMatrix::from_rows({{-1, 0}, {1, 1}}));
}

TEST(SolveBasisMap, RejectsNonBasisSource) {
  EXPECT_THROW(solve_basis_map({make_vector({2, 0}), make_vector({0, 1})},
                               {make_vector({1, 0}), make_vector({0, 1})}),
               ArgumentError);
  EXPECT_THROW(solve_basis_map({make_vector({1, 0})}, {make_vector({1, 0}), make_vector({0, 1})}),
               ArgumentError);
}

TEST(SolveBasisMap, MapsSourceOntoDestination) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + trial % 4;
    const IntMatrix s = testing::random_unimodular(rng, n);
    const IntMatrix d = to_matrix(random_small(rng, n, n, 4));
    std::vector<IntVector> src, dst;
    for (int k = 0; k < n; ++k) {
      src.push_back(s.column(k));
      dst.push_back(d.column(k));
    }
    const auto a = solve_basis_map(src, dst);
    ASSERT_TRUE(a.has_value());
    for (int k = 0; k < n; ++k) EXPECT_EQ(*a * src[k], dst[k]);
    if (is_unimodular(d)) {
      EXPECT_EQ(abs(det(*a)), 1);
    }
  }
}

TEST(InverseUnimodular, IsInverse) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + trial % 4;
    const IntMatrix u = testing::random_unimodular(rng, n);
    EXPECT_EQ(u * inverse_unimodular(u), IntMatrix::identity(n));
  }
}

}  // namespace
}  // namespace eqtoric
