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

// Lattice data of the kernel of V : (C*)^m -> (C*)^n, V(g) = prod_i
// lambda_{v_i}(g_i), from the quotient construction of a toric manifold.
//
// On cocharacter lattices V is the n x m ray matrix. Its kernel is a
// diagonalizable group: a torus with cocharacter lattice ker(rays) in Z^m
// (rank m - rank) times a finite group given by the invariant factors > 1.

#ifndef EQTORIC_QUOTIENT_HPP_
#define EQTORIC_QUOTIENT_HPP_

#include <sstream>
#include <string>
#include <vector>

#include "eqtoric/complex.hpp"
#include "eqtoric/error.hpp"
#include "eqtoric/fan.hpp"
#include "eqtoric/isomorphism.hpp"
#include "eqtoric/lattice.hpp"

namespace eqtoric {

struct KernelData {
  std::size_t rank = 0;
  std::vector<Integer> torsion;     // invariant factors > 1
  std::vector<IntVector> basis;     // Hermite-reduced basis of ker(rays) in Z^m
};

inline IntMatrix ray_matrix(const FanData& fan) {
  return IntMatrix::from_columns(fan.rays, fan.n);
}

namespace detail {

// Saturated kernel lattice of the n x m matrix `rays`, Hermite-reduced.
inline std::vector<IntVector> kernel_basis(const IntMatrix& rays, std::size_t& rank_out,
                                           std::vector<Integer>& torsion_out) {
  const auto snf = smith_normal_form(rays);
  const std::size_t r = snf.rank();
  rank_out = rays.cols() - r;
  torsion_out.clear();
  for (const auto& d : snf.diag)
    if (d > 1) torsion_out.push_back(d);
  // L M R = D, so M (R y) = 0 iff y_k = 0 for k < r.
  std::vector<IntVector> cols;
  for (std::size_t c = r; c < rays.cols(); ++c) cols.push_back(snf.right.column(c));
  if (cols.empty()) return {};
  return hermite_normal_form(IntMatrix::from_rows(cols)).row_list();
}

}  // namespace detail

inline KernelData kernel_data(const FanData& fan) {
  KernelData out;
  out.basis = detail::kernel_basis(ray_matrix(fan), out.rank, out.torsion);
  return out;
}

// rank: 1
// torsion: none
// basis:
//   (1, 1, 1)
inline std::string render_kernel_data(const KernelData& k) {
  std::ostringstream os;
  os << "rank: " << k.rank << "\ntorsion:";
  if (k.torsion.empty()) os << " none";
  for (const auto& t : k.torsion) os << ' ' << t;
  os << "\nbasis:\n";
  for (const auto& v : k.basis) os << "  " << to_string(v) << '\n';
  return os.str();
}

// Compares ker V' with the image of ker V under the sigma-relabeling and the
// eps-twist g_i -> g_i^{eps_i}, after absorbing A into the rays of `a`
// (a reparametrization of the torus, which leaves the kernel unchanged).
// The rays themselves are not required to match: that is what the kernel
// comparison detects. Throws ArgumentError when the witness is not even a
// well-formed (sigma, eps, A) for these fans.
inline bool kernels_equal(const FanData& a, const FanData& b, const IsoWitness& w) {
  const int m = a.m();
  if (a.n != b.n || m != b.m()) throw ArgumentError("kernels_equal: fans differ in n or m");
  if (!is_simplicial_isomorphism(a.complex, b.complex, w.sigma)) {
    throw ArgumentError("kernels_equal: sigma is not a simplicial isomorphism");
  }
  if (static_cast<int>(w.epsilon.size()) != m) throw ArgumentError("kernels_equal: bad epsilon length");
  for (int e : w.epsilon)
    if (e != 1 && e != -1) throw ArgumentError("kernels_equal: epsilon entry is not +-1");
  if (w.a.rows() != static_cast<std::size_t>(a.n) || !is_unimodular(w.a)) {
    throw ArgumentError("kernels_equal: A is not in GL(n, Z)");
  }

  FanData absorbed = a;
  for (auto& v : absorbed.rays) v = w.a * v;

  std::size_t rank_a = 0, rank_b = 0;
  std::vector<Integer> tors_a, tors_b;
  const auto ka = detail::kernel_basis(ray_matrix(absorbed), rank_a, tors_a);
  const auto kb = detail::kernel_basis(ray_matrix(b), rank_b, tors_b);
  if (rank_a != rank_b || tors_a != tors_b) return false;

  std::vector<IntVector> moved;
  for (const auto& x : ka) {
    IntVector y(m, Integer(0));
    for (int i = 1; i <= m; ++i) y[w.sigma(i) - 1] = w.epsilon[i - 1] * x[i - 1];
    moved.push_back(std::move(y));
  }
  if (moved.empty()) return kb.empty();
  return hermite_normal_form(IntMatrix::from_rows(moved)).row_list() == kb;
}

}  // namespace eqtoric

#endif  // EQTORIC_QUOTIENT_HPP_
