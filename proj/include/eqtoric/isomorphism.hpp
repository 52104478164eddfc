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

// Deciding (weak) isomorphism of equivariant cohomology algebras.
//
// Any algebra isomorphism f between two such algebras sends every Thom class
// t_i to +-t'_{sigma(i)} for a simplicial isomorphism sigma, because the
// zero-length |Z(xi)| is an algebra invariant and the Thom classes are
// exactly the degree-2 classes that are extremal for it. Compatibility with
// the H^*(BT)-structure then reads
//
//     eps_i * A * v_i == v'_{sigma(i)}   for every ray i,
//
// with A in GL(n, Z) (weak isomorphism) or A = I (isomorphism). So the
// search never leaves degree 2: it enumerates sigma among label-preserving
// simplicial isomorphisms (labels = zero-length of each Thom class), fixes A
// from one anchor cone and each sign pattern on it, and propagates to the
// remaining rays.

#ifndef EQTORIC_ISOMORPHISM_HPP_
#define EQTORIC_ISOMORPHISM_HPP_

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "eqtoric/cohomology.hpp"
#include "eqtoric/complex.hpp"
#include "eqtoric/error.hpp"
#include "eqtoric/fan.hpp"
#include "eqtoric/lattice.hpp"

namespace eqtoric {

enum class DecisionMode {
  kWeakToric,    // A ranges over GL(n, Z)
  kStrictToric,  // A = I
  kQuasitoric,   // A = I, characteristic pairs
  kSmallCover,   // A = I, eps = +1, equations mod 2
};

inline std::string_view decision_mode_name(DecisionMode mode) {
  switch (mode) {
    case DecisionMode::kWeakToric: return "weak";
    case DecisionMode::kStrictToric: return "strict";
    case DecisionMode::kQuasitoric: return "quasitoric";
    case DecisionMode::kSmallCover: return "smallcover";
  }
  return "?";
}

inline DecisionMode parse_decision_mode(std::string_view name) {
  if (name == "weak") return DecisionMode::kWeakToric;
  if (name == "strict") return DecisionMode::kStrictToric;
  if (name == "quasitoric") return DecisionMode::kQuasitoric;
  if (name == "smallcover") return DecisionMode::kSmallCover;
  throw ArgumentError("unknown decision mode '" + std::string(name) + "'");
}

struct IsoWitness {
  VertexMap sigma;
  std::vector<int> epsilon;  // +1 / -1, epsilon[i-1] for ray i
  IntMatrix a;

  bool uses_negative_sign() const {
    return std::find(epsilon.begin(), epsilon.end(), -1) != epsilon.end();
  }
};

struct DecideOptions {
  // Weak mode on quasitoric pairs. Experimental: only the A = I statement is
  // backed by theory for quasitoric manifolds.
  bool allow_weak_quasitoric = false;
};

// Throws ArgumentError when the fans' modes do not fit the decision mode.
inline void check_mode_compatibility(const FanData& a, const FanData& b, DecisionMode mode,
                                     const DecideOptions& opts = {}) {
  auto mismatch = [&](std::string_view want) {
    throw ArgumentError("mode mismatch: " + std::string(decision_mode_name(mode)) +
                        " decision needs " + std::string(want) + " fans, got " +
                        std::string(mode_name(a.mode)) + " and " + std::string(mode_name(b.mode)));
  };
  auto both = [&](FanMode x) { return a.mode == x && b.mode == x; };
  auto both_characteristic = [&] {
    auto ok = [](FanMode x) { return x == FanMode::kToric || x == FanMode::kQuasitoric; };
    return ok(a.mode) && ok(b.mode);
  };
  switch (mode) {
    case DecisionMode::kWeakToric:
      if (both(FanMode::kToric)) return;
      if (opts.allow_weak_quasitoric && both_characteristic()) return;
      mismatch(opts.allow_weak_quasitoric ? "toric or quasitoric" : "toric");
      break;
    case DecisionMode::kStrictToric:
      if (!both(FanMode::kToric)) mismatch("toric");
      break;
    case DecisionMode::kQuasitoric:
      if (!both_characteristic()) mismatch("toric or quasitoric");
      break;
    case DecisionMode::kSmallCover:
      if (!both(FanMode::kSmallCover)) mismatch("smallcover");
      break;
  }
}

// Zero-length of each Thom class, i -> |Z(t_i)| (entry i-1).
inline VertexLabels thom_stratification(const FanData& fan) {
  VertexLabels out;
  for (int i = 1; i <= fan.m(); ++i)
    out.push_back(static_cast<long long>(zero_length(fan, thom_class(fan.m(), i))));
  return out;
}

// Why `w` is not a witness for (a, b) in `mode`, or nullopt when it is.
// Rechecks every condition from scratch.
inline std::optional<std::string> witness_problem(const FanData& a, const FanData& b,
                                                  const IsoWitness& w, DecisionMode mode) {
  if (a.n != b.n || a.m() != b.m()) return "fans differ in n or m";
  const int m = a.m();
  const int n = a.n;
  if (w.sigma.size() != m) return "sigma has wrong length";
  for (int img : w.sigma.images())
    if (img < 1 || img > m) return "sigma image out of range";
  if (!w.sigma.is_permutation()) return "sigma is not a bijection";
  if (!is_simplicial_isomorphism(a.complex, b.complex, w.sigma)) {
    return "sigma does not carry maximal faces onto maximal faces";
  }
  if (static_cast<int>(w.epsilon.size()) != m) return "epsilon has wrong length";
  for (int e : w.epsilon)
    if (e != 1 && e != -1) return "epsilon entry is not +-1";
  if (w.a.rows() != static_cast<std::size_t>(n) || w.a.cols() != static_cast<std::size_t>(n)) {
    return "A is not n x n";
  }
  if (abs(det(w.a)) != 1) return "|det A| != 1";
  const bool fixed_a = mode != DecisionMode::kWeakToric;
  if (fixed_a && !(w.a == IntMatrix::identity(n))) return "A must be the identity in this mode";
  const bool mod2 = mode == DecisionMode::kSmallCover;
  if (mod2 && w.uses_negative_sign()) return "epsilon must be +1 for small covers";
  for (int i = 1; i <= m; ++i) {
    IntVector lhs = w.a * a.ray(i);
    if (w.epsilon[i - 1] == -1) lhs = negated(std::move(lhs));
    const IntVector& rhs = b.ray(w.sigma(i));
    bool equal = true;
    for (int k = 0; k < n; ++k) {
      const Integer diff = lhs[k] - rhs[k];
      if (mod2 ? diff % 2 != 0 : diff != 0) equal = false;
    }
    if (!equal) {
      return "ray " + std::to_string(i) + ": eps*A*v = " + to_string(lhs) + " but v'_" +
             std::to_string(w.sigma(i)) + " = " + to_string(rhs);
    }
  }
  return std::nullopt;
}

inline bool verify_witness(const FanData& a, const FanData& b, const IsoWitness& w,
                           DecisionMode mode) {
  return !witness_problem(a, b, w, mode).has_value();
}

// Witness for (b, a) from one for (a, b).
inline IsoWitness inverse_witness(const IsoWitness& w) {
  IsoWitness inv;
  inv.sigma = w.sigma.inverse();
  inv.epsilon.assign(w.epsilon.size(), 1);
  for (int i = 1; i <= w.sigma.size(); ++i) inv.epsilon[w.sigma(i) - 1] = w.epsilon[i - 1];
  inv.a = inverse_unimodular(w.a);
  return inv;
}

// Image of xi under the algebra map t_i -> eps_i t'_{sigma(i)}.
inline DegreeTwoClass transport_class(const IsoWitness& w, const DegreeTwoClass& xi) {
  DegreeTwoClass out{IntVector(xi.coeffs.size(), Integer(0))};
  for (int i = 1; i <= w.sigma.size(); ++i)
    out.coeffs[w.sigma(i) - 1] = w.epsilon[i - 1] * xi.coeffs[i - 1];
  return out;
}

namespace detail {

// The maximal cone whose multiset of vertex labels is shared by the fewest
// maximal cones (first in canonical order on ties).
inline Face choose_anchor(const SimplicialComplex& k, const VertexLabels& labels) {
  std::map<std::vector<long long>, int> freq;
  auto signature = [&](const Face& f) {
    std::vector<long long> s;
    for (int v : f) s.push_back(labels[v - 1]);
    std::sort(s.begin(), s.end());
    return s;
  };
  for (const auto& f : k.maximal_faces()) ++freq[signature(f)];
  const Face* best = nullptr;
  int best_count = 0;
  for (const auto& f : k.maximal_faces()) {
    const int c = freq[signature(f)];
    if (!best || c < best_count) {
      best = &f;
      best_count = c;
    }
  }
  return *best;
}

// Fills eps from A; false if some ray does not land on +-v'_{sigma(i)}.
inline bool propagate_signs(const FanData& a, const FanData& b, const VertexMap& sigma,
                            const IntMatrix& mat, bool mod2, std::vector<int>& eps) {
  eps.assign(a.m(), 1);
  for (int i = 1; i <= a.m(); ++i) {
    const IntVector& target = b.ray(sigma(i));
    const IntVector image = mat * a.ray(i);
    if (mod2) {
      for (int k = 0; k < a.n; ++k)
        if ((image[k] - target[k]) % 2 != 0) return false;
      continue;
    }
    if (image == target) continue;
    if (negated(image) == target) {
      eps[i - 1] = -1;
      continue;
    }
    return false;
  }
  return true;
}

}  // namespace detail

// Searches for a witness (sigma, eps, A). Both fans are expected to be
// validated. Candidate order is canonical, so the result is reproducible.
inline std::optional<IsoWitness> decide(const FanData& a, const FanData& b, DecisionMode mode,
                                        const DecideOptions& opts = {}) {
  check_mode_compatibility(a, b, mode, opts);
  if (a.n != b.n || a.m() != b.m()) return std::nullopt;
  if (a.complex.maximal_faces().size() != b.complex.maximal_faces().size()) return std::nullopt;

  const VertexLabels la = thom_stratification(a);
  const VertexLabels lb = thom_stratification(b);
  {
    VertexLabels sa = la, sb = lb;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return std::nullopt;
  }

  const int n = a.n;
  const bool weak = mode == DecisionMode::kWeakToric;
  const bool mod2 = mode == DecisionMode::kSmallCover;
  const Face anchor = detail::choose_anchor(a.complex, la);
  std::vector<IntVector> src;
  for (int i : anchor) src.push_back(a.ray(i));
  const IntMatrix identity = IntMatrix::identity(n);

  std::optional<IsoWitness> found;
  enumerate_isomorphisms(a.complex, b.complex, la, lb, [&](const VertexMap& sigma) {
    std::vector<int> eps;
    if (!weak) {
      if (detail::propagate_signs(a, b, sigma, identity, mod2, eps)) {
        found = IsoWitness{sigma, eps, identity};
        return false;
      }
      return true;
    }
    for (unsigned pattern = 0; pattern < (1u << n); ++pattern) {
      std::vector<IntVector> dst;
      for (int k = 0; k < n; ++k) {
        const IntVector& t = b.ray(sigma(anchor[k]));
        dst.push_back(pattern >> k & 1 ? negated(t) : t);
      }
      const auto mat = solve_basis_map(src, dst);
      if (!mat || abs(det(*mat)) != 1) continue;
      if (detail::propagate_signs(a, b, sigma, *mat, false, eps)) {
        found = IsoWitness{sigma, eps, *mat};
        return false;
      }
    }
    return true;
  });
  return found;
}

// Text form:
//   sigma: 1 4 3 2
//   epsilon: + + + +
//   A: [[1, 0], [0, -1]]
inline std::string render_witness(const IsoWitness& w) {
  std::ostringstream os;
  os << "sigma:";
  for (int v : w.sigma.images()) os << ' ' << v;
  os << "\nepsilon:";
  for (int e : w.epsilon) os << ' ' << (e > 0 ? '+' : '-');
  os << "\nA: " << w.a.to_string() << '\n';
  return os.str();
}

// {"sigma": [1, 4, 3, 2], "epsilon": [1, 1, 1, 1], "A": [[1, 0], [0, -1]]}
inline std::string render_witness_json(const IsoWitness& w) {
  std::ostringstream os;
  os << "{\"sigma\": [";
  for (std::size_t i = 0; i < w.sigma.images().size(); ++i) os << (i ? ", " : "") << w.sigma.images()[i];
  os << "], \"epsilon\": [";
  for (std::size_t i = 0; i < w.epsilon.size(); ++i) os << (i ? ", " : "") << w.epsilon[i];
  os << "], \"A\": " << w.a.to_string() << "}\n";
  return os.str();
}

}  // namespace eqtoric

#endif  // EQTORIC_ISOMORPHISM_HPP_
