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

// Equivariant cohomology of a toric manifold as an algebra over H^*(BT).
//
// As a ring it is the face ring Z[t_1..t_m] / (t_I : I not a face); the
// algebra structure is the structure map pi^*(u) = sum_i <u, v_i> t_i.
// H^2(BT) is written in the basis u_1..u_n dual to e_1..e_n, so every
// pairing is an integer dot product. Only degree-2 classes are modeled.
//
// For small covers all values are taken mod 2.

#ifndef EQTORIC_COHOMOLOGY_HPP_
#define EQTORIC_COHOMOLOGY_HPP_

#include <sstream>
#include <string>
#include <vector>

#include "eqtoric/complex.hpp"
#include "eqtoric/error.hpp"
#include "eqtoric/fan.hpp"
#include "eqtoric/lattice.hpp"

namespace eqtoric {

struct Presentation {
  int m = 0;
  int n = 0;
  std::vector<Face> relations;  // square-free monomials, sorted
  IntMatrix structure;          // m x n, row i-1 = v_i
};

inline Presentation presentation(const FanData& fan) {
  return {fan.m(), fan.n, minimal_nonfaces(fan.complex), IntMatrix::from_rows(fan.rays)};
}

// Canonical text rendering:
//   generators: t1 t2 t3
//   relations: t1*t2*t3
//   structure:
//     v1 = (1, 0)
//     ...
inline std::string render_presentation(const Presentation& p) {
  std::ostringstream os;
  os << "generators:";
  for (int i = 1; i <= p.m; ++i) os << " t" << i;
  os << "\nrelations:";
  if (p.relations.empty()) os << " none";
  for (const auto& r : p.relations) {
    os << ' ';
    for (std::size_t k = 0; k < r.size(); ++k) os << (k ? "*t" : "t") << r[k];
  }
  os << "\nstructure:\n";
  for (int i = 1; i <= p.m; ++i) os << "  v" << i << " = " << to_string(p.structure.row(i - 1)) << '\n';
  return os.str();
}

// xi = sum_i coeffs[i-1] * t_i.
struct DegreeTwoClass {
  IntVector coeffs;
  friend bool operator==(const DegreeTwoClass&, const DegreeTwoClass&) = default;
};

inline DegreeTwoClass thom_class(int m, int i) {
  DegreeTwoClass c{IntVector(m, Integer(0))};
  c.coeffs.at(i - 1) = 1;
  return c;
}

namespace detail {

inline bool mod2(const FanData& fan) { return fan.mode == FanMode::kSmallCover; }

inline Integer reduce2(const Integer& x) {
  Integer r = x % 2;
  return r < 0 ? -r : r;
}

inline void check_class(const FanData& fan, const DegreeTwoClass& xi) {
  if (static_cast<int>(xi.coeffs.size()) != fan.m()) {
    throw ArgumentError("class has " + std::to_string(xi.coeffs.size()) +
                        " coefficients, fan has " + std::to_string(fan.m()) + " rays");
  }
}

inline bool coeff_is_zero(const FanData& fan, const Integer& a) {
  return mod2(fan) ? reduce2(a) == 0 : a == 0;
}

}  // namespace detail

// pi^*(u): a_i = <u, v_i>.
inline DegreeTwoClass pi_star(const FanData& fan, const IntVector& u) {
  if (static_cast<int>(u.size()) != fan.n) throw ArgumentError("pi_star: covector length != n");
  DegreeTwoClass out{IntVector(fan.m())};
  for (int i = 1; i <= fan.m(); ++i) {
    out.coeffs[i - 1] = dot(u, fan.ray(i));
    if (detail::mod2(fan)) out.coeffs[i - 1] = detail::reduce2(out.coeffs[i - 1]);
  }
  return out;
}

// xi|p in H^2(BT). With (w_i) the basis dual to the cone's rays (v_i), i in
// the cone, xi|p = sum_{i in cone} a_i w_i; rays outside the cone restrict
// to zero. The dual basis is the row set of the inverse cone matrix.
inline IntVector restrict_class(const FanData& fan, const DegreeTwoClass& xi, const FixedPoint& p) {
  detail::check_class(fan, xi);
  if (static_cast<int>(p.cone.size()) != fan.n) throw ArgumentError("restrict: not a maximal cone");
  const IntMatrix v = cone_matrix(fan, p.cone);
  IntMatrix dual;
  if (detail::mod2(fan)) {
    if (det(v) % 2 == 0) throw ArgumentError("restrict: cone " + to_string(p.cone) + " is singular mod 2");
    dual = adjugate(v);
  } else {
    if (!is_unimodular(v)) throw ArgumentError("restrict: cone " + to_string(p.cone) + " is singular");
    dual = inverse_unimodular(v);
  }
  IntVector out(fan.n, Integer(0));
  for (std::size_t k = 0; k < p.cone.size(); ++k) {
    const Integer& a = xi.coeffs[p.cone[k] - 1];
    for (int j = 0; j < fan.n; ++j) out[j] += a * dual(k, j);
  }
  if (detail::mod2(fan))
    for (auto& x : out) x = detail::reduce2(x);
  return out;
}

inline std::vector<IntVector> restriction_table(const FanData& fan, const DegreeTwoClass& xi) {
  std::vector<IntVector> out;
  for (const auto& p : fixed_points(fan)) out.push_back(restrict_class(fan, xi, p));
  return out;
}

// |Z(xi)|: fixed points where xi restricts to zero. Since the restrictions
// of the t_i, i in a cone, form a basis, this is the number of maximal cones
// on which every coefficient of xi vanishes.
inline std::size_t zero_length(const FanData& fan, const DegreeTwoClass& xi) {
  detail::check_class(fan, xi);
  std::size_t count = 0;
  for (const auto& f : fan.complex.maximal_faces()) {
    bool vanishes = true;
    for (int i : f)
      if (!detail::coeff_is_zero(fan, xi.coeffs[i - 1])) {
        vanishes = false;
        break;
      }
    if (vanishes) ++count;
  }
  return count;
}

// Independent route to |Z(xi)|, the rank of the annihilator of xi after
// localization: solve <x, v_i> = a_i (i in the cone) for the restriction x
// at every fixed point by Cramer's rule and count the vanishing ones.
inline std::size_t annihilator_rank_oracle(const FanData& fan, const DegreeTwoClass& xi) {
  detail::check_class(fan, xi);
  std::size_t count = 0;
  for (const auto& p : fixed_points(fan)) {
    // Rows of vt are the cone's rays: vt * x = a.
    std::vector<IntVector> rows;
    IntVector a;
    for (int i : p.cone) {
      rows.push_back(fan.ray(i));
      a.push_back(xi.coeffs[i - 1]);
    }
    const IntMatrix vt = IntMatrix::from_rows(rows);
    const Integer d = det(vt);
    if (d == 0 || (detail::mod2(fan) && d % 2 == 0)) {
      throw ArgumentError("annihilator_rank_oracle: singular cone " + to_string(p.cone));
    }
    bool vanishes = true;
    for (int j = 0; j < fan.n && vanishes; ++j) {
      IntMatrix replaced = vt;
      for (int r = 0; r < fan.n; ++r) replaced(r, j) = a[r];
      const Integer num = det(replaced);
      // x_j = num / d, and d is odd in the mod-2 case.
      if (detail::mod2(fan) ? detail::reduce2(num) != 0 : num != 0) vanishes = false;
    }
    if (vanishes) ++count;
  }
  return count;
}

// Matrix of the degree-2 restriction map Z^m -> (Z^n)^{fixed points}:
// column i stacks the restrictions of t_i.
inline IntMatrix restriction_matrix(const FanData& fan) {
  const auto points = fixed_points(fan);
  IntMatrix out(points.size() * fan.n, fan.m());
  for (int i = 1; i <= fan.m(); ++i) {
    const auto t = thom_class(fan.m(), i);
    for (std::size_t p = 0; p < points.size(); ++p) {
      const auto r = restrict_class(fan, t, points[p]);
      for (int j = 0; j < fan.n; ++j) out(p * fan.n + j, i - 1) = r[j];
    }
  }
  return out;
}

namespace detail {

inline std::size_t rank_mod2(const IntMatrix& m) {
  std::vector<std::vector<bool>> a(m.rows(), std::vector<bool>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) a[r][c] = reduce2(m(r, c)) != 0;
  std::size_t rk = 0;
  for (std::size_t c = 0; c < m.cols() && rk < a.size(); ++c) {
    std::size_t p = rk;
    while (p < a.size() && !a[p][c]) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[rk]);
    for (std::size_t r = 0; r < a.size(); ++r)
      if (r != rk && a[r][c])
        for (std::size_t k = 0; k < m.cols(); ++k) a[r][k] = a[r][k] != a[rk][k];
    ++rk;
  }
  return rk;
}

}  // namespace detail

// Dimension of the kernel of the degree-2 restriction map (over Q, or over
// Z_2 for small covers). Zero means restriction to fixed points is
// injective in degree 2.
inline std::size_t restriction_kernel_dimension(const FanData& fan) {
  const IntMatrix r = restriction_matrix(fan);
  const std::size_t rk = detail::mod2(fan) ? detail::rank_mod2(r) : rank(r);
  return static_cast<std::size_t>(fan.m()) - rk;
}

}  // namespace eqtoric

#endif  // EQTORIC_COHOMOLOGY_HPP_
