// Copyright 2026 The Authors.
//
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

#ifndef BIASFORGE_MULTIGRAPH_HPP_
#define BIASFORGE_MULTIGRAPH_HPP_

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "biasforge/core.hpp"

namespace biasforge {

struct Endpoints {
  VertexId u = -1;
  VertexId v = -1;

  bool is_loop() const { return u == v; }
  VertexId other(VertexId x) const { return x == u ? v : u; }
  bool touches(VertexId x) const { return u == x || v == x; }
  bool operator==(const Endpoints&) const = default;
};

// Multigraph with loops and parallel edges. Edge ids are stable element
// names; endpoints may be re-homed by transforms.
class MultiGraph {
 public:
  MultiGraph() = default;

  void add_vertex(VertexId v) {
    if (v < 0 || v >= kMaxIds) fail(ErrorCode::kUnknownVertex, "vertex id out of range: " + std::to_string(v));
    vertices_.insert(v);
  }
  VertexId add_fresh_vertex() {
    VertexId v = fresh_vertex();
    add_vertex(v);
    return v;
  }
  VertexId fresh_vertex() const {
    for (VertexId v = 0; v < kMaxIds; ++v) {
      if (!vertices_.contains(v)) return v;
    }
    fail(ErrorCode::kCapExceeded, "more than 64 vertices");
  }

  void add_edge(EdgeId e, VertexId u, VertexId v) {
    if (e < 0 || e >= kMaxIds) fail(ErrorCode::kUnknownEdge, "edge id out of range: " + std::to_string(e));
    if (edges_.contains(e)) fail(ErrorCode::kDuplicateId, "edge " + std::to_string(e) + " already present");
    require_vertex(u);
    require_vertex(v);
    edges_.insert(e);
    ends_[static_cast<std::size_t>(e)] = Endpoints{std::min(u, v), std::max(u, v)};
    incidence_[static_cast<std::size_t>(u)].insert(e);
    incidence_[static_cast<std::size_t>(v)].insert(e);
  }

  void remove_edge(EdgeId e) {
    require_edge(e);
    Endpoints p = ends(e);
    incidence_[static_cast<std::size_t>(p.u)].erase(e);
    incidence_[static_cast<std::size_t>(p.v)].erase(e);
    edges_.erase(e);
  }

  void remove_vertex(VertexId v) {
    require_vertex(v);
    for (EdgeId e : incident(v)) remove_edge(e);
    vertices_.erase(v);
  }

  void set_endpoints(EdgeId e, VertexId u, VertexId v) {
    remove_edge(e);
    add_edge(e, u, v);
  }

  bool has_vertex(VertexId v) const { return vertices_.contains(v); }
  bool has_edge(EdgeId e) const { return edges_.contains(e); }
  VertexSet vertices() const { return vertices_; }
  EdgeSet edges() const { return edges_; }
  int num_vertices() const { return vertices_.size(); }
  int num_edges() const { return edges_.size(); }

  Endpoints ends(EdgeId e) const {
    require_edge(e);
    return ends_[static_cast<std::size_t>(e)];
  }
  bool is_loop(EdgeId e) const { return ends(e).is_loop(); }

  // All edges at v, loops included.
  EdgeSet incident(VertexId v) const {
    require_vertex(v);
    return incidence_[static_cast<std::size_t>(v)];
  }
  // δ(v): the links at v.
  EdgeSet links_at(VertexId v) const { return incident(v) - loops_at(v); }
  EdgeSet loops_at(VertexId v) const {
    EdgeSet out;
    for (EdgeId e : incident(v)) {
      if (ends_[static_cast<std::size_t>(e)].is_loop()) out.insert(e);
    }
    return out;
  }
  EdgeSet loops() const {
    EdgeSet out;
    for (EdgeId e : edges_) {
      if (ends_[static_cast<std::size_t>(e)].is_loop()) out.insert(e);
    }
    return out;
  }
  EdgeSet links() const { return edges_ - loops(); }

  VertexSet vertices_of(EdgeSet x) const {
    VertexSet out;
    for (EdgeId e : x) {
      Endpoints p = ends(e);
      out.insert(p.u);
      out.insert(p.v);
    }
    return out;
  }

  // Edges with every endpoint inside s.
  EdgeSet edges_within(VertexSet s) const {
    EdgeSet out;
    for (EdgeId e : edges_) {
      const Endpoints& p = ends_[static_cast<std::size_t>(e)];
      if (s.contains(p.u) && s.contains(p.v)) out.insert(e);
    }
    return out;
  }

  // Subgraph with edge set x and vertex set V(x).
  MultiGraph edge_subgraph(EdgeSet x) const {
    MultiGraph h;
    for (VertexId v : vertices_of(x)) h.add_vertex(v);
    for (EdgeId e : x) h.add_edge(e, ends(e).u, ends(e).v);
    return h;
  }

  // Keeps all vertices, drops the edges in x.
  MultiGraph without_edges(EdgeSet x) const {
    MultiGraph h = *this;
    for (EdgeId e : x & edges_) h.remove_edge(e);
    return h;
  }

  MultiGraph without_vertex(VertexId v) const {
    MultiGraph h = *this;
    h.remove_vertex(v);
    return h;
  }

  bool is_simple() const {
    if (!loops().empty()) return false;
    for (EdgeId e : edges_) {
      for (EdgeId f : edges_) {
        if (f > e && ends(e) == ends(f)) return false;
      }
    }
    return true;
  }

  bool operator==(const MultiGraph& o) const {
    if (vertices_ != o.vertices_ || edges_ != o.edges_) return false;
    for (EdgeId e : edges_) {
      if (!(ends(e) == o.ends(e))) return false;
    }
    return true;
  }

 private:
  void require_vertex(VertexId v) const {
    if (!vertices_.contains(v)) fail(ErrorCode::kUnknownVertex, "unknown vertex " + std::to_string(v));
  }
  void require_edge(EdgeId e) const {
    if (!edges_.contains(e)) fail(ErrorCode::kUnknownEdge, "unknown edge " + std::to_string(e));
  }

  VertexSet vertices_;
  EdgeSet edges_;
  std::array<Endpoints, kMaxIds> ends_{};
  std::array<EdgeSet, kMaxIds> incidence_{};
};

// Edge sets of the connected components of the subgraph (V(x), x).
inline std::vector<EdgeSet> edge_components(const MultiGraph& g, EdgeSet x) {
  UnionFind uf;
  for (EdgeId e : x) uf.unite(g.ends(e).u, g.ends(e).v);
  std::array<EdgeSet, kMaxIds> by_root{};
  VertexSet roots;
  for (EdgeId e : x) {
    int r = uf.find(g.ends(e).u);
    by_root[static_cast<std::size_t>(r)].insert(e);
    roots.insert(r);
  }
  std::vector<EdgeSet> out;
  for (int r : roots) out.push_back(by_root[static_cast<std::size_t>(r)]);
  return out;
}

// Vertex sets of the components of the subgraph induced on `keep`.
inline std::vector<VertexSet> vertex_components(const MultiGraph& g, VertexSet keep) {
  UnionFind uf;
  for (EdgeId e : g.edges_within(keep)) uf.unite(g.ends(e).u, g.ends(e).v);
  std::array<VertexSet, kMaxIds> by_root{};
  VertexSet roots;
  for (VertexId v : keep) {
    int r = uf.find(v);
    by_root[static_cast<std::size_t>(r)].insert(v);
    roots.insert(r);
  }
  std::vector<VertexSet> out;
  for (int r : roots) out.push_back(by_root[static_cast<std::size_t>(r)]);
  return out;
}

inline std::vector<VertexSet> vertex_components(const MultiGraph& g) {
  return vertex_components(g, g.vertices());
}

inline bool is_connected(const MultiGraph& g) { return vertex_components(g).size() <= 1; }

inline bool is_edge_set_connected(const MultiGraph& g, EdgeSet x) {
  return edge_components(g, x).size() <= 1;
}

// ---------------------------------------------------------------------------
// Cycles

inline bool is_cycle(const MultiGraph& g, EdgeSet c) {
  if (c.empty() || !c.subset_of(g.edges())) return false;
  if (c.size() == 1) return g.is_loop(c.first());
  std::array<int, kMaxIds> degree{};
  for (EdgeId e : c) {
    Endpoints p = g.ends(e);
    if (p.is_loop()) return false;
    ++degree[static_cast<std::size_t>(p.u)];
    ++degree[static_cast<std::size_t>(p.v)];
  }
  VertexSet vs = g.vertices_of(c);
  for (VertexId v : vs) {
    if (degree[static_cast<std::size_t>(v)] != 2) return false;
  }
  return vs.size() == c.size() && is_edge_set_connected(g, c);
}

// Every cycle as an edge set, each once, sorted by mask.
inline std::vector<EdgeSet> all_cycles(const MultiGraph& g,
                                       std::size_t cap = default_limits().max_cycles) {
  std::vector<EdgeSet> out;
  auto push = [&](EdgeSet c) {
    out.push_back(c);
    if (out.size() > cap) {
      fail(ErrorCode::kCapExceeded, "cycle count exceeds cap " + std::to_string(cap));
    }
  };
  for (EdgeId e : g.loops()) push(EdgeSet::single(e));

  EdgeSet links = g.links();
  for (EdgeId e : links) {
    const Endpoints p = g.ends(e);
    const VertexId target = p.u;
    EdgeSet higher = links - EdgeSet((std::uint64_t{2} << e) - 1);
    auto dfs = [&](auto&& self, VertexId x, VertexSet visited, EdgeSet path) -> void {
      for (EdgeId f : g.incident(x) & higher) {
        if (path.contains(f)) continue;
        VertexId y = g.ends(f).other(x);
        if (y == target) {
          push(path | EdgeSet::single(f));
        } else if (!visited.contains(y)) {
          VertexSet nv = visited;
          nv.insert(y);
          self(self, y, nv, path | EdgeSet::single(f));
        }
      }
    };
    VertexSet start;
    start.insert(p.u);
    start.insert(p.v);
    dfs(dfs, p.v, start, EdgeSet::single(e));
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Vertex sequence around a cycle, starting from its least vertex.
inline std::vector<VertexId> cycle_vertex_sequence(const MultiGraph& g, EdgeSet c) {
  if (!is_cycle(g, c)) fail(ErrorCode::kNotACycle, "edge set is not a cycle");
  VertexSet vs = g.vertices_of(c);
  std::vector<VertexId> seq{vs.first()};
  if (c.size() == 1) return seq;
  EdgeSet left = c;
  VertexId x = vs.first();
  while (static_cast<int>(seq.size()) < c.size()) {
    EdgeSet at = g.incident(x) & left;
    EdgeId step = at.first();
    if (seq.size() == 1) {
      // Walk toward the smaller neighbour for a canonical orientation.
      EdgeId alt = at.last();
      if (g.ends(alt).other(x) < g.ends(step).other(x)) step = alt;
    }
    left.erase(step);
    x = g.ends(step).other(x);
    seq.push_back(x);
  }
  return seq;
}

// ---------------------------------------------------------------------------
// Theta subgraphs

struct Theta {
  std::array<EdgeSet, 3> cycles;  // sorted by mask
  VertexId branch_a = -1;
  VertexId branch_b = -1;

  // The three internally disjoint branch paths.
  std::array<EdgeSet, 3> paths() const {
    return {cycles[0] & cycles[1], cycles[0] & cycles[2], cycles[1] & cycles[2]};
  }
  EdgeSet edges() const { return cycles[0] | cycles[1]; }
};

// The theta formed by two distinct cycles, if their union is one.
inline std::optional<Theta> theta_of(const MultiGraph& g, EdgeSet c1, EdgeSet c2) {
  if (c1 == c2) return std::nullopt;
  EdgeSet shared = c1 & c2;
  if (shared.empty()) return std::nullopt;
  VertexSet vs = g.vertices_of(shared);
  if (vs.size() != shared.size() + 1) return std::nullopt;
  if ((g.vertices_of(c1) & g.vertices_of(c2)) != vs) return std::nullopt;
  std::array<int, kMaxIds> degree{};
  for (EdgeId e : shared) {
    ++degree[static_cast<std::size_t>(g.ends(e).u)];
    ++degree[static_cast<std::size_t>(g.ends(e).v)];
  }
  Theta t;
  std::array<EdgeSet, 3> cs{c1, c2, c1 ^ c2};
  std::sort(cs.begin(), cs.end());
  t.cycles = cs;
  for (VertexId v : vs) {
    if (degree[static_cast<std::size_t>(v)] == 1) {
      if (t.branch_a < 0) {
        t.branch_a = v;
      } else {
        t.branch_b = v;
      }
    }
  }
  return t;
}

inline std::vector<Theta> theta_subgraphs(const MultiGraph& g, const std::vector<EdgeSet>& cycles) {
  std::vector<EdgeSet> cs;
  for (EdgeSet c : cycles) {
    if (c.size() > 1) cs.push_back(c);
  }
  std::sort(cs.begin(), cs.end());
  std::vector<VertexSet> vs;
  vs.reserve(cs.size());
  for (EdgeSet c : cs) vs.push_back(g.vertices_of(c));
  std::vector<Theta> out;
  for (std::size_t i = 0; i < cs.size(); ++i) {
    for (std::size_t j = i + 1; j < cs.size(); ++j) {
      if (!cs[i].intersects(cs[j])) continue;
      if ((cs[i] ^ cs[j]) < cs[j]) continue;
      if (auto t = theta_of(g, cs[i], cs[j])) out.push_back(*t);
    }
  }
  return out;
}

inline std::vector<Theta> theta_subgraphs(const MultiGraph& g) {
  return theta_subgraphs(g, all_cycles(g));
}

// ---------------------------------------------------------------------------
// Paths and rerouting

struct Path {
  std::vector<VertexId> vertices;
  std::vector<EdgeId> edges;

  VertexId start() const { return vertices.front(); }
  VertexId finish() const { return vertices.back(); }
  EdgeSet edge_set() const { return EdgeSet::of(edges); }
  VertexSet vertex_set() const { return VertexSet::of(vertices); }
  bool operator==(const Path&) const = default;
};

inline bool is_path(const MultiGraph& g, const Path& p) {
  if (p.vertices.empty() || p.vertices.size() != p.edges.size() + 1) return false;
  if (p.vertex_set().size() != static_cast<int>(p.vertices.size())) return false;
  for (std::size_t i = 0; i < p.edges.size(); ++i) {
    if (!g.has_edge(p.edges[i])) return false;
    Endpoints e = g.ends(p.edges[i]);
    if (e.is_loop() || !e.touches(p.vertices[i]) || e.other(p.vertices[i]) != p.vertices[i + 1]) {
      return false;
    }
  }
  return true;
}

// Builds the path that follows `edges` from `start`.
inline Path path_from_edges(const MultiGraph& g, VertexId start, const std::vector<EdgeId>& edges) {
  Path p;
  p.vertices.push_back(start);
  for (EdgeId e : edges) {
    p.edges.push_back(e);
    p.vertices.push_back(g.ends(e).other(p.vertices.back()));
  }
  if (!is_path(g, p)) fail(ErrorCode::kPrecondition, "edge sequence is not a path");
  return p;
}

inline Path subpath(const Path& p, std::size_t from, std::size_t to) {
  Path s;
  s.vertices.assign(p.vertices.begin() + static_cast<std::ptrdiff_t>(from),
                    p.vertices.begin() + static_cast<std::ptrdiff_t>(to) + 1);
  s.edges.assign(p.edges.begin() + static_cast<std::ptrdiff_t>(from),
                 p.edges.begin() + static_cast<std::ptrdiff_t>(to));
  return s;
}

struct RerouteStep {
  VertexId from = -1;
  VertexId to = -1;
  Path removed;
  Path inserted;
  Path result;
};

// Turns p into q one rerouting at a time; every step lengthens the common
// initial segment.
inline std::vector<RerouteStep> reroute_sequence(const MultiGraph& g, const Path& p, const Path& q) {
  if (!is_path(g, p) || !is_path(g, q)) fail(ErrorCode::kPrecondition, "arguments must be paths");
  if (p.start() != q.start() || p.finish() != q.finish()) {
    fail(ErrorCode::kEndpointMismatch, "paths do not share their endpoints");
  }
  std::vector<RerouteStep> steps;
  Path cur = p;
  while (!(cur == q)) {
    std::size_t k = 0;
    while (k < cur.edges.size() && k < q.edges.size() && cur.edges[k] == q.edges[k]) ++k;
    VertexSet on_cur = cur.vertex_set();
    std::size_t j = k + 1;
    while (!on_cur.contains(q.vertices[j])) ++j;
    VertexId y = q.vertices[j];
    std::size_t pos = static_cast<std::size_t>(
        std::find(cur.vertices.begin(), cur.vertices.end(), y) - cur.vertices.begin());
    RerouteStep step;
    step.from = cur.vertices[k];
    step.to = y;
    step.removed = subpath(cur, k, pos);
    step.inserted = subpath(q, k, j);
    Path next = subpath(cur, 0, k);
    next.vertices.pop_back();
    next.vertices.insert(next.vertices.end(), step.inserted.vertices.begin(), step.inserted.vertices.end());
    next.edges.insert(next.edges.end(), step.inserted.edges.begin(), step.inserted.edges.end());
    Path tail = subpath(cur, pos, cur.edges.size());
    next.vertices.insert(next.vertices.end(), tail.vertices.begin() + 1, tail.vertices.end());
    next.edges.insert(next.edges.end(), tail.edges.begin(), tail.edges.end());
    step.result = next;
    cur = next;
    steps.push_back(std::move(step));
  }
  return steps;
}

// ---------------------------------------------------------------------------
// Separations and connectivity

struct Separation {
  EdgeSet x;
  EdgeSet y;
  VertexSet boundary;
  int order = 0;
  bool proper = false;
};

inline Separation separation_of(const MultiGraph& g, EdgeSet x) {
  Separation s;
  s.x = x & g.edges();
  s.y = g.edges() - s.x;
  VertexSet vx = g.vertices_of(s.x);
  VertexSet vy = g.vertices_of(s.y);
  s.boundary = vx & vy;
  s.order = s.boundary.size();
  s.proper = !(vx - vy).empty() && !(vy - vx).empty();
  return s;
}

inline constexpr int kInfiniteConnectivity = std::numeric_limits<int>::max();

namespace detail {

template <class F>
void for_each_subset_of_size(VertexSet pool, int k, F&& f) {
  std::vector<VertexId> items = pool.to_vector();
  const int n = static_cast<int>(items.size());
  if (k > n) return;
  std::vector<int> idx(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
  while (true) {
    VertexSet s;
    for (int i : idx) s.insert(items[static_cast<std::size_t>(i)]);
    if (f(s)) return;
    int i = k - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) return;
    ++idx[static_cast<std::size_t>(i)];
    for (int t = i + 1; t < k; ++t) idx[static_cast<std::size_t>(t)] = idx[static_cast<std::size_t>(t - 1)] + 1;
  }
}

// Least order of a proper separation, searching orders below `bound`.
inline std::optional<int> least_separation_order(const MultiGraph& g, int bound) {
  const VertexSet all = g.vertices();
  for (int k = 0; k < bound && k <= all.size() - 2; ++k) {
    bool found = false;
    for_each_subset_of_size(all, k, [&](VertexSet s) {
      found = vertex_components(g, all - s).size() >= 2;
      return found;
    });
    if (found) return k;
  }
  return std::nullopt;
}

}  // namespace detail

// Least k admitting a proper k-separation. Without one, a simple graph gets
// the complete-graph value |V|-1 and any other graph gets the infinite
// sentinel; single-vertex graphs also get the sentinel.
inline int connectivity(const MultiGraph& g) {
  if (g.num_vertices() < 2) return kInfiniteConnectivity;
  if (auto k = detail::least_separation_order(g, g.num_vertices())) return *k;
  return g.is_simple() ? g.num_vertices() - 1 : kInfiniteConnectivity;
}

// No proper separation of order below k.
inline bool is_k_connected(const MultiGraph& g, int k) {
  return !detail::least_separation_order(g, k).has_value();
}

}  // namespace biasforge

#endif  // BIASFORGE_MULTIGRAPH_HPP_
