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

// A pair (complex, rays): the fan of a toric manifold, or the characteristic
// pair of a quasitoric manifold / small cover.

#ifndef EQTORIC_FAN_HPP_
#define EQTORIC_FAN_HPP_

#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include "eqtoric/complex.hpp"
#include "eqtoric/error.hpp"
#include "eqtoric/lattice.hpp"

namespace eqtoric {

enum class FanMode { kToric, kQuasitoric, kSmallCover };

inline std::string_view mode_name(FanMode mode) {
  switch (mode) {
    case FanMode::kToric: return "toric";
    case FanMode::kQuasitoric: return "quasitoric";
    case FanMode::kSmallCover: return "smallcover";
  }
  return "?";
}

inline FanMode parse_mode(std::string_view name) {
  if (name == "toric") return FanMode::kToric;
  if (name == "quasitoric") return FanMode::kQuasitoric;
  if (name == "smallcover") return FanMode::kSmallCover;
  throw ArgumentError("unknown fan mode '" + std::string(name) + "'");
}

struct FanData {
  int n = 0;                     // rank of the torus
  std::vector<IntVector> rays;   // v_1..v_m, ray i stored at index i-1
  SimplicialComplex complex;
  FanMode mode = FanMode::kToric;

  int m() const { return static_cast<int>(rays.size()); }
  const IntVector& ray(int i) const { return rays.at(i - 1); }

  friend bool operator==(const FanData& a, const FanData& b) {
    return a.n == b.n && a.mode == b.mode && a.rays == b.rays && a.complex == b.complex;
  }
};

// Matrix whose columns are the rays of `face`, in face order.
inline IntMatrix cone_matrix(const FanData& fan, const Face& face) {
  std::vector<IntVector> cols;
  cols.reserve(face.size());
  for (int i : face) cols.push_back(fan.ray(i));
  return IntMatrix::from_columns(cols, fan.n);
}

// Violations of the FanData invariants that do not need any geometry:
// shapes, ranges, nonzero/primitive rays, 0/1 entries for small covers,
// purity of the complex.
inline std::vector<std::string> structural_problems(const FanData& fan) {
  std::vector<std::string> out;
  if (fan.n < 1) out.push_back("rank n must be positive");
  if (fan.complex.vertex_count() != fan.m()) {
    out.push_back("complex has " + std::to_string(fan.complex.vertex_count()) +
                  " vertices but there are " + std::to_string(fan.m()) + " rays");
  }
  for (int i = 1; i <= fan.m(); ++i) {
    const auto& v = fan.ray(i);
    const std::string name = "ray " + std::to_string(i) + " " + to_string(v);
    if (static_cast<int>(v.size()) != fan.n) {
      out.push_back(name + " has length " + std::to_string(v.size()) + ", expected " +
                    std::to_string(fan.n));
      continue;
    }
    if (is_zero(v)) {
      out.push_back(name + " is zero");
      continue;
    }
    if (fan.mode == FanMode::kSmallCover) {
      for (const auto& x : v)
        if (x != 0 && x != 1) {
          out.push_back(name + " has an entry outside {0,1} in smallcover mode");
          break;
        }
    } else if (!is_primitive(v)) {
      out.push_back(name + " is not primitive (gcd " + content(v).str() + ")");
    }
  }
  for (const auto& f : fan.complex.maximal_faces())
    if (static_cast<int>(f.size()) != fan.n) {
      out.push_back("maximal cone " + to_string(f) + " has " + std::to_string(f.size()) +
                    " rays, expected n=" + std::to_string(fan.n));
    }
  return out;
}

inline FanData make_fan(int n, std::vector<IntVector> rays, SimplicialComplex complex,
                        FanMode mode = FanMode::kToric) {
  FanData fan{n, std::move(rays), std::move(complex), mode};
  const auto problems = structural_problems(fan);
  if (!problems.empty()) throw StructuralError(problems.front());
  return fan;
}

struct ValidationOptions {
  // Also require the link/Euler-characteristic conditions of a sphere.
  bool strict_sphere = false;
  int shooting_rays = 1000;
  std::uint64_t shooting_seed = 20070501;
};

struct ValidationIssue {
  std::string check;  // structure, nonsingular, pseudomanifold, sphere, wall, overlap, coverage
  std::string detail;
};

struct ValidationReport {
  std::vector<ValidationIssue> issues;

  bool valid() const { return issues.empty(); }
  bool failed(std::string_view check) const {
    for (const auto& i : issues)
      if (i.check == check) return true;
    return false;
  }
};

namespace detail {

// Feasibility of { x >= 0, rows * x >= 0, sum(x) >= 1 } by exact
// Fourier-Motzkin elimination.
inline bool nonneg_cone_meets(const std::vector<IntVector>& rows, std::size_t k) {
  struct Ineq {
    IntVector a;  // a . x >= b
    Integer b;
    bool operator<(const Ineq& o) const { return std::tie(a, b) < std::tie(o.a, o.b); }
  };
  auto normalized = [](Ineq q) {
    Integer g = abs(q.b);
    for (const auto& x : q.a) g = boost::multiprecision::gcd(g, abs(x));
    if (g > 1) {
      for (auto& x : q.a) x /= g;
      q.b /= g;
    }
    return q;
  };
  std::set<Ineq> sys;
  for (std::size_t j = 0; j < k; ++j) {
    IntVector e(k, Integer(0));
    e[j] = 1;
    sys.insert({e, 0});
  }
  for (const auto& r : rows) sys.insert(normalized({r, 0}));
  sys.insert({IntVector(k, Integer(1)), 1});

  for (std::size_t t = 0; t < k; ++t) {
    std::vector<Ineq> pos, neg;
    std::set<Ineq> next;
    for (const auto& q : sys) {
      if (q.a[t] > 0) pos.push_back(q);
      else if (q.a[t] < 0) neg.push_back(q);
      else next.insert(q);
    }
    for (const auto& p : pos)
      for (const auto& q : neg) {
        Ineq c{IntVector(k, Integer(0)), 0};
        const Integer wp = -q.a[t];
        const Integer wq = p.a[t];
        for (std::size_t j = 0; j < k; ++j) c.a[j] = wp * p.a[j] + wq * q.a[j];
        c.b = wp * p.b + wq * q.b;
        next.insert(normalized(std::move(c)));
      }
    sys.clear();
    for (const auto& q : next) {
      if (is_zero(q.a)) {
        if (q.b > 0) return false;
        continue;
      }
      sys.insert(q);
    }
  }
  for (const auto& q : sys)
    if (q.b > 0) return false;
  return true;
}

// Sign-corrected adjugate: rows give |det| times the coordinates of a vector
// in the basis of the cone's rays.
struct ConeCoordinates {
  bool full = false;
  IntMatrix coords;
};

inline ConeCoordinates cone_coordinates(const FanData& fan, const Face& face) {
  const IntMatrix a = cone_matrix(fan, face);
  const Integer d = det(a);
  if (d == 0) return {};
  IntMatrix adj = adjugate(a);
  if (d < 0)
    for (std::size_t r = 0; r < adj.rows(); ++r) adj.negate_row(r);
  return {true, std::move(adj)};
}

inline IntVector random_direction(std::mt19937_64& rng, int n) {
  std::uniform_int_distribution<long long> dist(-1000000, 1000000);
  IntVector v(n);
  do {
    for (auto& x : v) x = dist(rng);
  } while (is_zero(v));
  return v;
}

}  // namespace detail

// Checks, in order: structure; nonsingularity of every maximal cone
// (det = +-1, or odd for small covers); pseudomanifold structure of the
// complex (plus sphere conditions when requested); and for toric fans the
// completeness tests: opposite sides across every wall, pairwise proper
// intersection of maximal cones, and a fixed-seed ray-shooting coverage
// backstop.
inline ValidationReport validate(const FanData& fan, const ValidationOptions& opts = {}) {
  ValidationReport rep;
  auto add = [&rep](std::string check, std::string detail) {
    rep.issues.push_back({std::move(check), std::move(detail)});
  };
  for (auto& p : structural_problems(fan)) add("structure", std::move(p));
  if (!rep.valid()) return rep;

  const auto& cones = fan.complex.maximal_faces();
  for (const auto& f : cones) {
    const Integer d = det(cone_matrix(fan, f));
    if (fan.mode == FanMode::kSmallCover) {
      if (d % 2 == 0) add("nonsingular", "cone " + to_string(f) + " has even determinant " + d.str());
    } else if (abs(d) != 1) {
      add("nonsingular", "cone " + to_string(f) + " has determinant " + d.str());
    }
  }

  const auto pm = is_pure_pseudomanifold(fan.complex, fan.n);
  for (const auto& p : pm.problems) add("pseudomanifold", p);

  if (opts.strict_sphere && pm.ok) {
    const long long expected = 1 + ((fan.n - 1) % 2 == 0 ? 1 : -1);
    const long long chi = euler_characteristic(fan.complex);
    if (chi != expected) {
      add("sphere", "Euler characteristic " + std::to_string(chi) + ", a sphere of dimension " +
                        std::to_string(fan.n - 1) + " has " + std::to_string(expected));
    }
    if (fan.n >= 2) {
      for (int v = 1; v <= fan.m(); ++v) {
        auto link = vertex_link_faces(fan.complex, v);
        std::set<int> used;
        for (const auto& f : link) used.insert(f.begin(), f.end());
        std::vector<int> relabel(fan.m() + 1, 0);
        int next = 0;
        for (int u : used) relabel[u] = ++next;
        for (auto& f : link)
          for (auto& u : f) u = relabel[u];
        const auto lpm = is_pure_pseudomanifold(SimplicialComplex(next, link), fan.n - 1);
        if (!lpm.ok) add("sphere", "link of vertex " + std::to_string(v) + ": " + lpm.problems.front());
      }
    }
  }

  if (fan.mode != FanMode::kToric || !pm.ok) return rep;

  // Walls: the two opposite rays lie strictly on opposite sides.
  std::map<Face, std::vector<int>> opposite;
  for (const auto& f : cones)
    for (int drop : f) {
      Face wall;
      for (int x : f)
        if (x != drop) wall.push_back(x);
      opposite[wall].push_back(drop);
    }
  for (const auto& [wall, ends] : opposite) {
    // h(x) = det[v_wall | x]
    auto side = [&](int i) {
      std::vector<IntVector> cols;
      for (int w : wall) cols.push_back(fan.ray(w));
      cols.push_back(fan.ray(i));
      const Integer d = det(IntMatrix::from_columns(cols, fan.n));
      return d > 0 ? 1 : (d < 0 ? -1 : 0);
    };
    const int s0 = side(ends[0]);
    const int s1 = side(ends[1]);
    if (s0 == 0 || s1 == 0 || s0 == s1) {
      add("wall", "rays " + std::to_string(ends[0]) + " and " + std::to_string(ends[1]) +
                      " are not strictly separated by the hyperplane of wall " + to_string(wall));
    }
  }

  std::vector<detail::ConeCoordinates> coords;
  coords.reserve(cones.size());
  for (const auto& f : cones) coords.push_back(detail::cone_coordinates(fan, f));

  // Pairwise proper intersection. For cones A, B with common face S, a point
  // of A n B outside S exists iff some x >= 0 on the rays of B - S, not all
  // zero, has nonnegative A-coordinates on A - S (the S-coordinates can
  // always be made nonnegative).
  for (std::size_t a = 0; a < cones.size(); ++a) {
    if (!coords[a].full) continue;
    for (std::size_t b = a + 1; b < cones.size(); ++b) {
      if (!coords[b].full) continue;
      const Face& fa = cones[a];
      const Face& fb = cones[b];
      std::vector<int> only_b;
      for (int j : fb)
        if (!std::binary_search(fa.begin(), fa.end(), j)) only_b.push_back(j);
      std::vector<IntVector> rows;
      for (std::size_t r = 0; r < fa.size(); ++r) {
        if (std::binary_search(fb.begin(), fb.end(), fa[r])) continue;
        IntVector row;
        for (int j : only_b) row.push_back(dot(coords[a].coords.row(r), fan.ray(j)));
        rows.push_back(std::move(row));
      }
      if (detail::nonneg_cone_meets(rows, only_b.size())) {
        add("overlap", "cones " + to_string(fa) + " and " + to_string(fb) +
                           " overlap beyond their common face");
      }
    }
  }

  std::mt19937_64 rng(opts.shooting_seed);
  int uncovered = 0;
  IntVector first_miss;
  for (int s = 0; s < opts.shooting_rays; ++s) {
    const IntVector x = detail::random_direction(rng, fan.n);
    bool hit = false;
    for (const auto& c : coords) {
      if (!c.full) continue;
      const IntVector y = c.coords * x;
      if (std::all_of(y.begin(), y.end(), [](const Integer& t) { return t >= 0; })) {
        hit = true;
        break;
      }
    }
    if (!hit) {
      if (uncovered++ == 0) first_miss = x;
    }
  }
  if (uncovered > 0) {
    add("coverage", std::to_string(uncovered) + " of " + std::to_string(opts.shooting_rays) +
                        " sample rays lie in no maximal cone, e.g. " + to_string(first_miss));
  }
  return rep;
}

struct FixedPoint {
  Face cone;
  friend bool operator==(const FixedPoint&, const FixedPoint&) = default;
};

// Torus-fixed points correspond to maximal cones, in canonical order.
inline std::vector<FixedPoint> fixed_points(const FanData& fan) {
  std::vector<FixedPoint> out;
  for (const auto& f : fan.complex.maximal_faces()) out.push_back({f});
  return out;
}

// Equivariant blow-up along the orbit closure of `face`: adds the ray
// sum_{i in face} v_i and stellar-subdivides the complex.
inline FanData blow_up(const FanData& fan, Face face) {
  if (fan.mode != FanMode::kToric) throw ArgumentError("blow_up: fan must be in toric mode");
  SimplicialComplex sub = stellar_subdivide(fan.complex, face);
  IntVector fresh(fan.n, Integer(0));
  for (int i : face)
    for (int k = 0; k < fan.n; ++k) fresh[k] += fan.ray(i)[k];
  FanData out{fan.n, fan.rays, std::move(sub), fan.mode};
  out.rays.push_back(std::move(fresh));
  return out;
}

// CP^n: rays e_1..e_n and -(e_1+...+e_n) over the boundary of the n-simplex.
inline FanData projective_space(int n) {
  if (n < 1) throw ArgumentError("projective_space: n must be >= 1");
  std::vector<IntVector> rays;
  for (int i = 0; i < n; ++i) {
    IntVector e(n, Integer(0));
    e[i] = 1;
    rays.push_back(std::move(e));
  }
  rays.emplace_back(n, Integer(-1));
  return make_fan(n, std::move(rays), simplex_boundary(n));
}

// Hirzebruch surface: rays (1,0), (0,1), (-1,a), (0,-1) over the 4-cycle.
inline FanData hirzebruch(long long a) {
  return make_fan(2, {make_vector({1, 0}), make_vector({0, 1}), make_vector({-1, a}),
                      make_vector({0, -1})},
                  cycle(4));
}

// Product fan: rays (v, 0) then (0, w), complex the join.
inline FanData product(const FanData& a, const FanData& b) {
  if (a.mode != b.mode) throw ArgumentError("product: fans must have the same mode");
  std::vector<IntVector> rays;
  for (const auto& v : a.rays) {
    IntVector r = v;
    r.resize(a.n + b.n, Integer(0));
    rays.push_back(std::move(r));
  }
  for (const auto& w : b.rays) {
    IntVector r(a.n, Integer(0));
    r.insert(r.end(), w.begin(), w.end());
    rays.push_back(std::move(r));
  }
  return make_fan(a.n + b.n, std::move(rays), join(a.complex, b.complex), a.mode);
}

// Built-ins addressable by name: "projective_space" (param n) and
// "hirzebruch" (param a). Products take fans and go through product().
inline FanData standard_example(std::string_view name, const std::vector<long long>& params) {
  auto want = [&](std::size_t k) {
    if (params.size() != k) {
      throw ArgumentError(std::string(name) + " takes " + std::to_string(k) + " parameter(s)");
    }
  };
  if (name == "projective_space") {
    want(1);
    return projective_space(static_cast<int>(params[0]));
  }
  if (name == "hirzebruch") {
    want(1);
    return hirzebruch(params[0]);
  }
  throw ArgumentError("unknown standard example '" + std::string(name) + "'");
}

}  // namespace eqtoric

#endif  // EQTORIC_FAN_HPP_
