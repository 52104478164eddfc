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

// Abstract simplicial complexes on the vertex set [m] = {1, ..., m}.
//
// Vertices are 1-indexed everywhere in the public interface. Internally a
// face is also kept as a 64-bit mask (bit i-1 for vertex i), which bounds m
// by 64; fans of interest are far smaller.

#ifndef EQTORIC_COMPLEX_HPP_
#define EQTORIC_COMPLEX_HPP_

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "eqtoric/error.hpp"

namespace eqtoric {

// A sorted list of distinct 1-indexed vertices.
using Face = std::vector<int>;

inline constexpr int kMaxVertices = 64;

inline std::string to_string(const Face& f) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (i) os << ',';
    os << f[i];
  }
  os << '}';
  return os.str();
}

namespace detail {

using Mask = std::uint64_t;

inline Mask to_mask(const Face& f) {
  Mask m = 0;
  for (int v : f) m |= Mask{1} << (v - 1);
  return m;
}

inline Face to_face(Mask m) {
  Face f;
  while (m) {
    const int b = std::countr_zero(m);
    f.push_back(b + 1);
    m &= m - 1;
  }
  return f;
}

}  // namespace detail

class SimplicialComplex {
 public:
  SimplicialComplex() = default;

  // Throws StructuralError unless the faces form a valid list of maximal
  // faces on [m]: vertices in range, no repeats, no face contained in
  // another, every vertex used. Faces are canonicalized (each sorted, the
  // list sorted lexicographically).
  SimplicialComplex(int m, std::vector<Face> maximal_faces) : m_(m) {
    if (m < 1 || m > kMaxVertices) {
      throw StructuralError("vertex count m=" + std::to_string(m) +
                            " outside supported range [1, 64]");
    }
    for (auto& f : maximal_faces) {
      if (f.empty()) throw StructuralError("empty maximal face");
      std::sort(f.begin(), f.end());
      for (int v : f)
        if (v < 1 || v > m) {
          throw StructuralError("vertex " + std::to_string(v) + " out of range [1," +
                                std::to_string(m) + "]");
        }
      if (std::adjacent_find(f.begin(), f.end()) != f.end()) {
        throw StructuralError("repeated vertex in face " + to_string(f));
      }
    }
    std::sort(maximal_faces.begin(), maximal_faces.end());
    for (std::size_t i = 0; i + 1 < maximal_faces.size(); ++i)
      if (maximal_faces[i] == maximal_faces[i + 1]) {
        throw StructuralError("duplicate maximal face " + to_string(maximal_faces[i]));
      }
    faces_ = std::move(maximal_faces);
    masks_.reserve(faces_.size());
    for (const auto& f : faces_) masks_.push_back(detail::to_mask(f));
    detail::Mask used = 0;
    for (std::size_t i = 0; i < masks_.size(); ++i) {
      used |= masks_[i];
      for (std::size_t j = 0; j < masks_.size(); ++j)
        if (i != j && (masks_[i] & masks_[j]) == masks_[i]) {
          throw StructuralError("face " + to_string(faces_[i]) + " is contained in " +
                                to_string(faces_[j]));
        }
    }
    for (int v = 1; v <= m; ++v)
      if (!(used >> (v - 1) & 1)) {
        throw StructuralError("vertex " + std::to_string(v) + " lies in no maximal face");
      }
  }

  int vertex_count() const { return m_; }
  const std::vector<Face>& maximal_faces() const { return faces_; }
  const std::vector<detail::Mask>& maximal_masks() const { return masks_; }

  // Largest face size.
  std::size_t max_face_size() const {
    std::size_t s = 0;
    for (const auto& f : faces_) s = std::max(s, f.size());
    return s;
  }

  bool is_maximal_face(const Face& f) const {
    return std::binary_search(faces_.begin(), faces_.end(), f);
  }

  friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
    return a.m_ == b.m_ && a.faces_ == b.faces_;
  }

 private:
  int m_ = 0;
  std::vector<Face> faces_;
  std::vector<detail::Mask> masks_;
};

namespace detail {

inline void check_vertices(const SimplicialComplex& k, const Face& f) {
  for (int v : f)
    if (v < 1 || v > k.vertex_count()) {
      throw ArgumentError("vertex " + std::to_string(v) + " out of range [1," +
                          std::to_string(k.vertex_count()) + "]");
    }
}

inline bool is_face_mask(const SimplicialComplex& k, Mask s) {
  for (Mask f : k.maximal_masks())
    if ((s & f) == s) return true;
  return false;
}

}  // namespace detail

// True iff `face` lies in some maximal face. The empty set is a face.
inline bool is_face(const SimplicialComplex& k, Face face) {
  std::sort(face.begin(), face.end());
  detail::check_vertices(k, face);
  return detail::is_face_mask(k, detail::to_mask(face));
}

// Inclusion-minimal non-faces, sorted lexicographically. These are the
// square-free generators of the Stanley-Reisner ideal.
//
// Every minimal non-face N splits uniquely as F + {v} with F = N - {max N} a
// face, so it suffices to extend each face by a larger vertex.
inline std::vector<Face> minimal_nonfaces(const SimplicialComplex& k) {
  using detail::Mask;
  std::unordered_set<Mask> faces{0};
  for (Mask f : k.maximal_masks()) {
    for (Mask s = f;; s = (s - 1) & f) {
      faces.insert(s);
      if (s == 0) break;
    }
  }
  std::vector<Face> out;
  const int m = k.vertex_count();
  for (Mask f : faces) {
    const int top = f ? 64 - std::countl_zero(f) : 0;
    for (int v = top + 1; v <= m; ++v) {
      const Mask n = f | (Mask{1} << (v - 1));
      if (faces.count(n)) continue;
      bool minimal = true;
      for (Mask rest = n; rest && minimal; rest &= rest - 1) {
        const Mask bit = rest & (~rest + 1);
        if (!faces.count(n & ~bit)) minimal = false;
      }
      if (minimal) out.push_back(detail::to_face(n));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

struct PseudomanifoldReport {
  bool ok = true;
  std::vector<std::string> problems;
};

// Pure of the given face size, every wall (face of size n-1 inside a maximal
// face) in exactly two maximal faces, and the dual graph connected.
inline PseudomanifoldReport is_pure_pseudomanifold(const SimplicialComplex& k, int n) {
  using detail::Mask;
  PseudomanifoldReport rep;
  auto fail = [&rep](std::string msg) {
    rep.ok = false;
    rep.problems.push_back(std::move(msg));
  };
  const auto& faces = k.maximal_faces();
  const auto& masks = k.maximal_masks();
  for (const auto& f : faces)
    if (static_cast<int>(f.size()) != n) {
      fail("maximal face " + to_string(f) + " has " + std::to_string(f.size()) +
           " vertices, expected " + std::to_string(n));
    }
  if (!rep.ok) return rep;

  std::map<Mask, std::vector<std::size_t>> walls;
  for (std::size_t i = 0; i < masks.size(); ++i)
    for (Mask rest = masks[i]; rest; rest &= rest - 1) {
      const Mask bit = rest & (~rest + 1);
      walls[masks[i] & ~bit].push_back(i);
    }
  std::vector<std::size_t> parent(masks.size());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    return parent[x] == x ? x : parent[x] = find(parent[x]);
  };
  for (const auto& [wall, owners] : walls) {
    if (owners.size() != 2) {
      fail("wall " + to_string(detail::to_face(wall)) + " lies in " +
           std::to_string(owners.size()) + " maximal face(s), expected 2");
      continue;
    }
    parent[find(owners[0])] = find(owners[1]);
  }
  std::size_t components = 0;
  for (std::size_t i = 0; i < masks.size(); ++i)
    if (find(i) == i) ++components;
  if (components > 1) {
    fail("dual graph has " + std::to_string(components) + " connected components");
  }
  return rep;
}

// Euler characteristic sum over nonempty faces of (-1)^(dim).
inline long long euler_characteristic(const SimplicialComplex& k) {
  using detail::Mask;
  std::unordered_set<Mask> faces;
  for (Mask f : k.maximal_masks())
    for (Mask s = f; s; s = (s - 1) & f) faces.insert(s);
  long long chi = 0;
  for (Mask s : faces) chi += (std::popcount(s) % 2 == 1) ? 1 : -1;
  return chi;
}

// link(v) = { F - {v} : v in F maximal }, as a complex on the vertices it
// uses, relabeled to 1..k in increasing order. Empty when v is the whole
// face (n = 1).
inline std::vector<Face> vertex_link_faces(const SimplicialComplex& k, int v) {
  std::vector<Face> link;
  for (const auto& f : k.maximal_faces()) {
    if (!std::binary_search(f.begin(), f.end(), v)) continue;
    Face g;
    for (int x : f)
      if (x != v) g.push_back(x);
    link.push_back(std::move(g));
  }
  return link;
}

// An injective map [m] -> [m'], stored 1-indexed: image(i) for i in 1..m.
class VertexMap {
 public:
  VertexMap() = default;
  explicit VertexMap(std::vector<int> images) : images_(std::move(images)) {}

  static VertexMap identity(int m) {
    std::vector<int> v(m);
    std::iota(v.begin(), v.end(), 1);
    return VertexMap(std::move(v));
  }

  int size() const { return static_cast<int>(images_.size()); }
  int operator()(int vertex) const { return images_[vertex - 1]; }
  const std::vector<int>& images() const { return images_; }
  std::vector<int>& images() { return images_; }

  Face apply(const Face& f) const {
    Face g;
    g.reserve(f.size());
    for (int v : f) g.push_back((*this)(v));
    std::sort(g.begin(), g.end());
    return g;
  }

  bool is_permutation() const {
    std::vector<int> s = images_;
    std::sort(s.begin(), s.end());
    for (std::size_t i = 0; i < s.size(); ++i)
      if (s[i] != static_cast<int>(i) + 1) return false;
    return true;
  }

  // Only meaningful for permutations.
  VertexMap inverse() const {
    std::vector<int> inv(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i) inv[images_[i] - 1] = static_cast<int>(i) + 1;
    return VertexMap(std::move(inv));
  }

  VertexMap then(const VertexMap& next) const {
    std::vector<int> out(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i) out[i] = next(images_[i]);
    return VertexMap(std::move(out));
  }

  friend bool operator==(const VertexMap& a, const VertexMap& b) {
    return a.images_ == b.images_;
  }

 private:
  std::vector<int> images_;
};

// True iff `map` is a bijection [m] -> [m'] carrying the maximal faces of `a`
// onto the maximal faces of `b`.
inline bool is_simplicial_isomorphism(const SimplicialComplex& a, const SimplicialComplex& b,
                                      const VertexMap& map) {
  if (a.vertex_count() != b.vertex_count() || map.size() != a.vertex_count()) return false;
  for (int img : map.images())
    if (img < 1 || img > b.vertex_count()) return false;
  if (!map.is_permutation()) return false;
  if (a.maximal_faces().size() != b.maximal_faces().size()) return false;
  for (const auto& f : a.maximal_faces())
    if (!b.is_maximal_face(map.apply(f))) return false;
  return true;
}

// Per-vertex invariant that every isomorphism must preserve; entry i-1 is
// the label of vertex i. Empty means "no labels".
using VertexLabels = std::vector<long long>;

// Calls `visit` for every simplicial isomorphism a -> b that preserves the
// labels, in a deterministic order, until `visit` returns false. Returns the
// number of maps visited.
//
// Each vertex tries itself as image first, so when a == b the identity is
// the first map visited.
//
// Backtracking: vertices of `a` are assigned in BFS order over the
// 1-skeleton, starting from the rarest (label, degree) class; a partial map
// is pruned as soon as an edge fails to map to an edge or a fully assigned
// maximal face fails to map to a maximal face.
inline std::size_t enumerate_isomorphisms(const SimplicialComplex& a,
                                          const SimplicialComplex& b,
                                          const VertexLabels& labels_a,
                                          const VertexLabels& labels_b,
                                          const std::function<bool(const VertexMap&)>& visit) {
  using detail::Mask;
  const int m = a.vertex_count();
  if (m != b.vertex_count()) return 0;
  if (a.maximal_faces().size() != b.maximal_faces().size()) return 0;
  const bool labeled = !labels_a.empty() || !labels_b.empty();
  if (labeled && (labels_a.size() != static_cast<std::size_t>(m) ||
                  labels_b.size() != static_cast<std::size_t>(m))) {
    throw ArgumentError("enumerate_isomorphisms: label vectors must have one entry per vertex");
  }

  auto adjacency = [m](const SimplicialComplex& k) {
    std::vector<Mask> adj(m, 0);
    for (Mask f : k.maximal_masks())
      for (Mask rest = f; rest; rest &= rest - 1) {
        const int v = std::countr_zero(rest);
        adj[v] |= f & ~(Mask{1} << v);
      }
    return adj;
  };
  auto face_counts = [m](const SimplicialComplex& k) {
    std::vector<int> cnt(m, 0);
    for (const auto& f : k.maximal_faces())
      for (int v : f) ++cnt[v - 1];
    return cnt;
  };
  const auto adj_a = adjacency(a);
  const auto adj_b = adjacency(b);
  const auto deg_a = face_counts(a);
  const auto deg_b = face_counts(b);
  using Key = std::tuple<long long, int, int>;
  auto key_a = [&](int v) {
    return Key{labeled ? labels_a[v] : 0, deg_a[v], std::popcount(adj_a[v])};
  };
  auto key_b = [&](int v) {
    return Key{labeled ? labels_b[v] : 0, deg_b[v], std::popcount(adj_b[v])};
  };

  std::map<Key, int> class_a, class_b;
  for (int v = 0; v < m; ++v) {
    ++class_a[key_a(v)];
    ++class_b[key_b(v)];
  }
  if (class_a != class_b) return 0;

  // Assignment order.
  std::vector<int> order;
  std::vector<bool> placed(m, false);
  while (static_cast<int>(order.size()) < m) {
    int start = -1;
    for (int v = 0; v < m; ++v) {
      if (placed[v]) continue;
      if (start < 0 || class_a[key_a(v)] < class_a[key_a(start)]) start = v;
    }
    std::vector<int> queue{start};
    placed[start] = true;
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      const int v = queue[qi];
      order.push_back(v);
      for (Mask rest = adj_a[v]; rest; rest &= rest - 1) {
        const int w = std::countr_zero(rest);
        if (!placed[w]) {
          placed[w] = true;
          queue.push_back(w);
        }
      }
    }
  }
  std::vector<int> position(m);
  for (int i = 0; i < m; ++i) position[order[i]] = i;

  // Maximal faces of `a` to check once their last vertex (in `order`) is set.
  std::vector<std::vector<Mask>> faces_closing_at(m);
  for (Mask f : a.maximal_masks()) {
    int last = 0;
    for (Mask rest = f; rest; rest &= rest - 1) {
      last = std::max(last, position[std::countr_zero(rest)]);
    }
    faces_closing_at[last].push_back(f);
  }
  const std::unordered_set<Mask> faces_b(b.maximal_masks().begin(), b.maximal_masks().end());

  std::vector<int> image(m, -1);
  std::vector<bool> used(m, false);
  std::size_t visited = 0;
  bool stop = false;

  std::function<void(int)> extend = [&](int depth) {
    if (stop) return;
    if (depth == m) {
      std::vector<int> images(m);
      for (int v = 0; v < m; ++v) images[v] = image[v] + 1;
      ++visited;
      if (!visit(VertexMap(std::move(images)))) stop = true;
      return;
    }
    const int v = order[depth];
    for (int step = -1; step < m && !stop; ++step) {
      // v -> v first, then increasing order.
      const int w = step < 0 ? v : step;
      if (step == v) continue;
      if (used[w] || key_a(v) != key_b(w)) continue;
      bool ok = true;
      for (int d = 0; d < depth && ok; ++d) {
        const int u = order[d];
        const bool ea = adj_a[v] >> u & 1;
        const bool eb = adj_b[w] >> image[u] & 1;
        if (ea != eb) ok = false;
      }
      if (!ok) continue;
      image[v] = w;
      for (Mask f : faces_closing_at[depth]) {
        Mask g = 0;
        for (Mask rest = f; rest; rest &= rest - 1) g |= Mask{1} << image[std::countr_zero(rest)];
        if (!faces_b.count(g)) {
          ok = false;
          break;
        }
      }
      if (ok) {
        used[w] = true;
        extend(depth + 1);
        used[w] = false;
      }
      image[v] = -1;
    }
  };
  extend(0);
  return visited;
}

inline std::vector<VertexMap> all_isomorphisms(const SimplicialComplex& a,
                                               const SimplicialComplex& b,
                                               const VertexLabels& labels_a = {},
                                               const VertexLabels& labels_b = {}) {
  std::vector<VertexMap> out;
  enumerate_isomorphisms(a, b, labels_a, labels_b, [&out](const VertexMap& s) {
    out.push_back(s);
    return true;
  });
  return out;
}

// Stellar subdivision at a face: a new vertex m+1 is placed in the interior
// of `face`, and every maximal face F containing it is replaced by the
// faces (F - {i}) + {m+1}, i in `face`.
//
// A single vertex is rejected: subdividing a ray would orphan that vertex.
inline SimplicialComplex stellar_subdivide(const SimplicialComplex& k, Face face) {
  std::sort(face.begin(), face.end());
  detail::check_vertices(k, face);
  if (face.empty()) throw ArgumentError("stellar_subdivide: face must be nonempty");
  if (std::adjacent_find(face.begin(), face.end()) != face.end()) {
    throw ArgumentError("stellar_subdivide: repeated vertex in " + to_string(face));
  }
  if (!is_face(k, face)) {
    throw ArgumentError("stellar_subdivide: " + to_string(face) + " is not a face");
  }
  if (face.size() < 2) {
    throw ArgumentError("stellar_subdivide: subdividing the single vertex " +
                        to_string(face) + " leaves the complex unchanged up to relabeling");
  }
  const int fresh = k.vertex_count() + 1;
  std::vector<Face> out;
  for (const auto& f : k.maximal_faces()) {
    if (!std::includes(f.begin(), f.end(), face.begin(), face.end())) {
      out.push_back(f);
      continue;
    }
    for (int drop : face) {
      Face g;
      for (int x : f)
        if (x != drop) g.push_back(x);
      g.push_back(fresh);
      out.push_back(std::move(g));
    }
  }
  return SimplicialComplex(fresh, std::move(out));
}

// Join: vertices of `b` are shifted by a.vertex_count().
inline SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b) {
  const int shift = a.vertex_count();
  std::vector<Face> out;
  for (const auto& f : a.maximal_faces())
    for (const auto& g : b.maximal_faces()) {
      Face h = f;
      for (int v : g) h.push_back(v + shift);
      out.push_back(std::move(h));
    }
  return SimplicialComplex(shift + b.vertex_count(), std::move(out));
}

// Boundary of the simplex on [n+1].
inline SimplicialComplex simplex_boundary(int n) {
  std::vector<Face> faces;
  for (int skip = 1; skip <= n + 1; ++skip) {
    Face f;
    for (int v = 1; v <= n + 1; ++v)
      if (v != skip) f.push_back(v);
    faces.push_back(std::move(f));
  }
  return SimplicialComplex(n + 1, std::move(faces));
}

// The cycle 1 - 2 - ... - m - 1.
inline SimplicialComplex cycle(int m) {
  std::vector<Face> faces;
  for (int v = 1; v <= m; ++v) faces.push_back(Face{v, v % m + 1});
  return SimplicialComplex(m, std::move(faces));
}

}  // namespace eqtoric

#endif  // EQTORIC_COMPLEX_HPP_
