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

#ifndef BIASFORGE_ANALYSIS_HPP_
#define BIASFORGE_ANALYSIS_HPP_

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "biasforge/frame_matroid.hpp"
#include "biasforge/representations.hpp"
#include "biasforge/transforms.hpp"

namespace biasforge {

// ---------------------------------------------------------------------------
// Contrabalanced thetas with a shortcut

struct ShortcutTheta {
  Theta theta;
  EdgeSet shortcut;  // a path joining interiors of two branch paths, avoiding the theta otherwise
};

// Searches thetas assembled from unbalanced cycles of at most `max_cycle`
// edges; a miss is not a proof of absence.
inline std::optional<ShortcutTheta> find_shortcut_theta(const BiasedGraph& w, int max_cycle = 4) {
  const MultiGraph& g = w.graph();
  std::vector<EdgeSet> short_unbalanced;
  for (EdgeSet c : w.unbalanced_cycles()) {
    if (c.size() <= max_cycle && c.size() >= 2) short_unbalanced.push_back(c);
  }
  for (std::size_t i = 0; i < short_unbalanced.size(); ++i) {
    for (std::size_t j = i + 1; j < short_unbalanced.size(); ++j) {
      auto t = theta_of(g, short_unbalanced[i], short_unbalanced[j]);
      if (!t || std::any_of(t->cycles.begin(), t->cycles.end(), [&](EdgeSet c) { return w.is_balanced_cycle(c); })) {
        continue;
      }
      const std::array<EdgeSet, 3> paths = t->paths();
      const VertexSet theta_vertices = g.vertices_of(t->edges());
      std::array<VertexSet, 3> inner;
      for (std::size_t k = 0; k < 3; ++k) {
        inner[k] = g.vertices_of(paths[k]) - VertexSet{t->branch_a, t->branch_b};
      }
      // Breadth-first search outside the theta from each interior vertex.
      for (std::size_t k = 0; k < 3; ++k) {
        for (VertexId s : inner[k]) {
          std::array<EdgeId, kMaxIds> via{};
          std::array<VertexId, kMaxIds> prev{};
          VertexSet seen = VertexSet::single(s);
          std::vector<VertexId> queue{s};
          for (std::size_t q = 0; q < queue.size(); ++q) {
            VertexId x = queue[q];
            for (EdgeId e : g.links_at(x) - t->edges()) {
              VertexId y = g.ends(e).other(x);
              if (seen.contains(y)) continue;
              bool target = false;
              for (std::size_t o = 0; o < 3; ++o) {
                if (o != k && inner[o].contains(y)) target = true;
              }
              if (target) {
                EdgeSet path = EdgeSet::single(e);
                for (VertexId z = x; z != s; z = prev[static_cast<std::size_t>(z)]) {
                  path.insert(via[static_cast<std::size_t>(z)]);
                }
                return ShortcutTheta{*t, path};
              }
              if (theta_vertices.contains(y)) continue;
              seen.insert(y);
              via[static_cast<std::size_t>(y)] = e;
              prev[static_cast<std::size_t>(y)] = x;
              queue.push_back(y);
            }
          }
        }
      }
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Committed vertices

enum class CommitRoute { kShortcutTheta, kBruteForceU24, kGraphicOracle };

inline const char* commit_route_name(CommitRoute r) {
  switch (r) {
    case CommitRoute::kShortcutTheta: return "shortcut-theta";
    case CommitRoute::kBruteForceU24: return "u24-search";
    case CommitRoute::kGraphicOracle: return "graphic-oracle";
  }
  return "?";
}

struct CommitReport {
  VertexId vertex = -1;
  bool committed = false;
  CommitRoute route = CommitRoute::kBruteForceU24;
  bool hyperplane = false;  // E \ δ(x)+ is a hyperplane
  bool connected = false;   // F(Ω - x) is connected
  bool nonbinary = false;
  std::optional<bool> graphic;         // set when the graphic oracle ran
  std::optional<U24Witness> witness;   // U(2,4) minor of F(Ω - x)
  std::optional<MultiGraph> graph;     // graph whose cycle matroid is F(Ω - x)
};

// Answers committedness per vertex of one biased graph, caching results.
// With a 3-connected graph and a balancing vertex, x is committed exactly
// when F(Ω - x) has a U(2,4) minor. Otherwise the definition is evaluated
// directly: connected hyperplane whose restriction is not graphic.
class CommitAnalyzer {
 public:
  explicit CommitAnalyzer(BiasedGraph w, Limits limits = default_limits())
      : w_(std::move(w)), limits_(limits.with_ground(w_.edges().size())) {
    const MultiGraph& g = w_.graph();
    const int k = connectivity(g);
    minor_route_ = k >= 3 && !balancing_vertices(w_).empty();
  }

  const BiasedGraph& graph() const { return w_; }
  bool uses_u24_equivalence() const { return minor_route_; }

  const CommitReport& report(VertexId x) {
    if (!w_.vertices().contains(x)) fail(ErrorCode::kUnknownVertex, "unknown vertex " + std::to_string(x));
    auto it = cache_.find(x);
    if (it != cache_.end()) return it->second;
    return cache_.emplace(x, compute(x)).first->second;
  }

  bool committed(VertexId x) { return report(x).committed; }

  std::vector<CommitReport> all() {
    std::vector<CommitReport> out;
    for (VertexId x : w_.vertices()) out.push_back(report(x));
    return out;
  }

 private:
  CommitReport compute(VertexId x) {
    CommitReport r;
    r.vertex = x;
    const BiasedGraph rest = w_.without_vertex(x);
    const EdgeSet e_rest = rest.edges();
    const Matroid whole = matroid_of(w_);
    const Matroid sub = matroid_of(rest);
    r.hyperplane = whole.is_hyperplane(e_rest);
    r.connected = !e_rest.empty() && sub.is_connected();

    std::optional<U24Witness> found;
    if (auto st = find_shortcut_theta(rest)) {
      const EdgeSet core = st->theta.edges() | st->shortcut;
      if (auto local = find_u24_minor(sub.restrict_to(core), limits_)) {
        local->deleted |= e_rest - core;
        found = *local;
        r.route = CommitRoute::kShortcutTheta;
      }
    }
    if (!found) {
      found = find_u24_minor(sub, limits_);
      r.route = CommitRoute::kBruteForceU24;
    }
    r.nonbinary = found.has_value();
    r.witness = found;
    if (minor_route_) {
      r.committed = r.nonbinary;
      return r;
    }
    r.route = CommitRoute::kGraphicOracle;
    if (!r.hyperplane || !r.connected) {
      r.committed = false;
      return r;
    }
    if (r.nonbinary) {
      r.graphic = false;
      r.committed = true;
      return r;
    }
    auto h = is_graphic_bruteforce(sub, limits_);
    r.graphic = h.has_value();
    r.graph = h;
    r.committed = !h.has_value();
    return r;
  }

  BiasedGraph w_;
  Limits limits_;
  bool minor_route_ = false;
  std::map<VertexId, CommitReport> cache_;
};

inline CommitReport committed(const BiasedGraph& w, VertexId x, const Limits& limits = default_limits()) {
  CommitAnalyzer a(w, limits);
  return a.report(x);
}

// Evaluates the definition directly: E \ δ(x)+ is a connected hyperplane
// and the graphic oracle finds no graph for it.
inline bool committed_by_definition(const BiasedGraph& w, VertexId x, const Limits& limits = default_limits()) {
  const BiasedGraph rest = w.without_vertex(x);
  const Matroid sub = matroid_of(rest);
  if (rest.edges().empty() || !matroid_of(w).is_hyperplane(rest.edges()) || !sub.is_connected()) return false;
  return !is_graphic_bruteforce(sub, limits).has_value();
}

// ---------------------------------------------------------------------------
// 2-separations of the frame matroid

enum class SeparationForm {
  kBalancedSides,          // both sides balanced and connected
  kLoopPair,               // two unbalanced loops at the boundary, the rest neutral
  kUnbalancedTwoBoundary,  // one unbalanced part meeting the boundary twice
  kBalancedPlusLoop,       // a balanced part on three boundary vertices and an unbalanced loop
  kTwoBalancedParts,       // two balanced parts on three boundary vertices each
  kBalancedFourBoundary,   // one balanced part on four boundary vertices
  kUnrecognized,
};

inline const char* separation_form_name(SeparationForm f) {
  switch (f) {
    case SeparationForm::kBalancedSides: return "balanced-sides";
    case SeparationForm::kLoopPair: return "loop-pair";
    case SeparationForm::kUnbalancedTwoBoundary: return "unbalanced-two-boundary";
    case SeparationForm::kBalancedPlusLoop: return "balanced-plus-loop";
    case SeparationForm::kTwoBalancedParts: return "two-balanced-parts";
    case SeparationForm::kBalancedFourBoundary: return "balanced-four-boundary";
    case SeparationForm::kUnrecognized: return "unrecognized";
  }
  return "?";
}

struct ClassifiedSeparation {
  EdgeSet x;
  EdgeSet y;
  VertexSet boundary;
  SeparationForm form = SeparationForm::kUnrecognized;
};

inline SeparationForm classify_separation(const BiasedGraph& w, EdgeSet x, EdgeSet y) {
  const MultiGraph& g = w.graph();
  const VertexSet s = g.vertices_of(x) & g.vertices_of(y);
  if (w.is_balanced_subgraph(x) && w.is_balanced_subgraph(y) && is_edge_set_connected(g, x) &&
      is_edge_set_connected(g, y)) {
    return SeparationForm::kBalancedSides;
  }
  // Parts meeting the boundary in t vertices contribute t - 2 when balanced
  // and t otherwise; neutral parts are balanced with t = 2.
  std::vector<std::pair<int, bool>> loaded;  // (t, balanced) of non-neutral parts
  for (EdgeSet side : {x, y}) {
    for (EdgeSet part : edge_components(g, side)) {
      const int t = (g.vertices_of(part) & s).size();
      const bool balanced = w.is_balanced_subgraph(part);
      if (balanced && t == 2) continue;
      loaded.emplace_back(t, balanced);
    }
  }
  std::sort(loaded.begin(), loaded.end());
  using P = std::vector<std::pair<int, bool>>;
  if (loaded == P{{1, false}, {1, false}}) return SeparationForm::kLoopPair;
  if (loaded == P{{2, false}}) return SeparationForm::kUnbalancedTwoBoundary;
  if (loaded == P{{1, false}, {3, true}}) return SeparationForm::kBalancedPlusLoop;
  if (loaded == P{{3, true}, {3, true}}) return SeparationForm::kTwoBalancedParts;
  if (loaded == P{{4, true}}) return SeparationForm::kBalancedFourBoundary;
  return SeparationForm::kUnrecognized;
}

// Every exact 2-separation of F(Ω), each reported once with the side that
// holds the least edge first.
inline std::vector<ClassifiedSeparation> classify_2separations(const BiasedGraph& w, int max_ground = 22) {
  const MultiGraph& g = w.graph();
  if (w.is_balanced()) fail(ErrorCode::kPrecondition, "biased graph is balanced");
  if (connectivity(g) < 3) fail(ErrorCode::kPrecondition, "graph is not 3-connected");
  const std::vector<EdgeId> ids = g.edges().to_vector();
  const int m = static_cast<int>(ids.size());
  if (m > max_ground) fail(ErrorCode::kCapExceeded, "separation scan limited to " + std::to_string(max_ground) + " edges");
  std::vector<ClassifiedSeparation> out;
  if (m < 4) return out;
  const int total_rank = rank(w, g.edges());
  const std::uint32_t half = std::uint32_t{1} << (m - 1);
  for (std::uint32_t mask = 0; mask < half; ++mask) {
    EdgeSet x = EdgeSet::single(ids[0]);
    for (int i = 1; i < m; ++i) {
      if ((mask >> (i - 1)) & 1u) x.insert(ids[static_cast<std::size_t>(i)]);
    }
    EdgeSet y = g.edges() - x;
    if (x.size() < 2 || y.size() < 2) continue;
    if (rank(w, x) + rank(w, y) - total_rank + 1 != 2) continue;
    ClassifiedSeparation c;
    c.x = x;
    c.y = y;
    c.boundary = g.vertices_of(x) & g.vertices_of(y);
    c.form = classify_separation(w, x, y);
    out.push_back(c);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Lobes and H-reduction

enum class LobeKind { kBalanced, kPinch };

inline const char* lobe_kind_name(LobeKind k) { return k == LobeKind::kBalanced ? "balanced" : "pinch"; }

struct RootedTriangle {
  std::array<EdgeId, 3> edges{};  // roots 0-1, 1-2, 2-0
  EdgeSet contract;               // spanning trees of the three branch sets
};

// Disjoint connected branch sets around the three roots, pairwise joined by
// an edge. Tries every assignment of the remaining vertices.
inline std::optional<RootedTriangle> rooted_triangle(const MultiGraph& h, const std::array<VertexId, 3>& roots,
                                                     int max_free = 10) {
  std::vector<VertexId> free;
  for (VertexId v : h.vertices()) {
    if (v != roots[0] && v != roots[1] && v != roots[2]) free.push_back(v);
  }
  if (static_cast<int>(free.size()) > max_free) {
    fail(ErrorCode::kCapExceeded, "rooted triangle search limited to " + std::to_string(max_free) + " free vertices");
  }
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < free.size(); ++i) total *= 4;
  for (std::uint64_t code = 0; code < total; ++code) {
    std::array<VertexSet, 3> branch{VertexSet::single(roots[0]), VertexSet::single(roots[1]),
                                     VertexSet::single(roots[2])};
    std::uint64_t rest = code;
    for (VertexId v : free) {
      int d = static_cast<int>(rest % 4);
      rest /= 4;
      if (d > 0) branch[static_cast<std::size_t>(d - 1)].insert(v);
    }
    RootedTriangle t;
    bool ok = true;
    for (std::size_t i = 0; i < 3 && ok; ++i) {
      UnionFind uf;
      int pieces = branch[i].size();
      for (EdgeId e : h.edges_within(branch[i])) {
        if (uf.unite(h.ends(e).u, h.ends(e).v)) {
          t.contract.insert(e);
          --pieces;
        }
      }
      ok = pieces == 1;
    }
    for (std::size_t i = 0; i < 3 && ok; ++i) {
      const VertexSet a = branch[i], b = branch[(i + 1) % 3];
      EdgeId pick = -1;
      for (EdgeId e : h.links()) {
        Endpoints p = h.ends(e);
        if ((a.contains(p.u) && b.contains(p.v)) || (a.contains(p.v) && b.contains(p.u))) {
          pick = e;
          break;
        }
      }
      if (pick < 0) ok = false;
      t.edges[i] = pick;
    }
    if (ok) return t;
  }
  return std::nullopt;
}

struct Lobe {
  LobeKind kind = LobeKind::kBalanced;
  EdgeSet edges;
  VertexSet boundary;
  VertexSet interior;
  VertexId pivot = -1;  // balancing vertex of a pinch lobe
  // The lobe as a graph: the subgraph itself when balanced, or the graph
  // obtained by splitting the pivot. roots = (v_A, v_B, v_C).
  MultiGraph pattern;
  std::array<VertexId, 3> roots{};
  std::array<EdgeId, 3> triangle{};  // a = v_A v_B, b = v_B v_C, c = v_C v_A
  EdgeSet contracted;
  EdgeSet deleted;
};

struct ReductionPlan {
  BiasedGraph original;
  std::vector<Lobe> lobes;
  BiasedGraph reduced;
  EdgeSet contracted;
  EdgeSet deleted;
};

namespace detail {

inline bool subgraph_is_balanced(const BiasedGraph& w, EdgeSet x) { return w.is_balanced_subgraph(x); }

// Components of G - S with the edges that touch them, plus the edges inside S.
struct BoundaryPieces {
  std::vector<VertexSet> components;
  std::vector<EdgeSet> component_edges;
  std::vector<EdgeId> boundary_edges;
};

inline BoundaryPieces pieces_around(const MultiGraph& g, VertexSet s) {
  BoundaryPieces p;
  p.components = vertex_components(g, g.vertices() - s);
  for (VertexSet k : p.components) {
    EdgeSet es;
    for (VertexId v : k) es |= g.incident(v);
    p.component_edges.push_back(es);
  }
  for (EdgeId e : g.edges_within(s)) p.boundary_edges.push_back(e);
  return p;
}

inline std::optional<Lobe> make_lobe(const BiasedGraph& w, EdgeSet x, VertexSet s, VertexSet interior) {
  const MultiGraph& g = w.graph();
  Lobe lobe;
  lobe.edges = x;
  lobe.boundary = s;
  lobe.interior = interior;
  if (s.size() == 3) {
    if (!subgraph_is_balanced(w, x)) return std::nullopt;
    lobe.kind = LobeKind::kBalanced;
    lobe.pattern = g.edge_subgraph(x);
    std::vector<VertexId> r = s.to_vector();
    lobe.roots = {r[0], r[1], r[2]};
  } else {
    if (subgraph_is_balanced(w, x)) return std::nullopt;
    const BiasedGraph h = w.restricted_to(x);
    bool found = false;
    for (VertexId pivot : s) {
      try {
        MultiGraph split_graph = split(h, pivot);
        const VertexId u2 = (split_graph.vertices() - h.vertices()).first();
        lobe.pattern = split_graph.edge_subgraph(x);
        const VertexId other = (s - VertexSet::single(pivot)).first();
        lobe.roots = {pivot, u2, other};
        lobe.pivot = pivot;
        found = true;
        break;
      } catch (const Error&) {
      }
    }
    if (!found) return std::nullopt;
    lobe.kind = LobeKind::kPinch;
  }
  for (VertexId r : lobe.roots) {
    if (!lobe.pattern.has_vertex(r)) return std::nullopt;
  }
  auto t = rooted_triangle(lobe.pattern, lobe.roots);
  if (!t) return std::nullopt;
  lobe.triangle = t->edges;
  lobe.contracted = t->contract;
  lobe.deleted = x - t->contract - EdgeSet{t->edges[0], t->edges[1], t->edges[2]};
  return lobe;
}

}  // namespace detail

// Every candidate lobe of Ω, largest first, ties broken by boundary and
// edge set.
inline std::vector<Lobe> lobe_candidates(const BiasedGraph& w, CommitAnalyzer& commits, int max_pieces = 14) {
  const MultiGraph& g = w.graph();
  std::vector<Lobe> out;
  const std::vector<VertexId> vs = g.vertices().to_vector();
  std::vector<VertexSet> boundaries;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      boundaries.push_back(VertexSet{vs[i], vs[j]});
      for (std::size_t k = j + 1; k < vs.size(); ++k) boundaries.push_back(VertexSet{vs[i], vs[j], vs[k]});
    }
  }
  for (VertexSet s : boundaries) {
    detail::BoundaryPieces p = detail::pieces_around(g, s);
    const int k = static_cast<int>(p.components.size());
    const int b = static_cast<int>(p.boundary_edges.size());
    if (k == 0) continue;
    if (k + b > max_pieces) fail(ErrorCode::kCapExceeded, "lobe search limited to " + std::to_string(max_pieces) + " pieces");
    for (std::uint32_t cm = 1; cm < (std::uint32_t{1} << k); ++cm) {
      VertexSet interior;
      EdgeSet base;
      bool all_committed = true;
      for (int i = 0; i < k; ++i) {
        if (!((cm >> i) & 1u)) continue;
        interior |= p.components[static_cast<std::size_t>(i)];
        base |= p.component_edges[static_cast<std::size_t>(i)];
      }
      for (VertexId v : interior) {
        if (!commits.committed(v)) {
          all_committed = false;
          break;
        }
      }
      if (!all_committed) continue;
      for (std::uint32_t bm = 0; bm < (std::uint32_t{1} << b); ++bm) {
        EdgeSet x = base;
        for (int i = 0; i < b; ++i) {
          if ((bm >> i) & 1u) x.insert(p.boundary_edges[static_cast<std::size_t>(i)]);
        }
        const EdgeSet y = g.edges() - x;
        if ((g.vertices_of(x) & g.vertices_of(y)) != s) continue;
        if (auto lobe = detail::make_lobe(w, x, s, interior)) out.push_back(*lobe);
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const Lobe& a, const Lobe& b) {
    if (a.edges.size() != b.edges.size()) return a.edges.size() > b.edges.size();
    if (a.boundary != b.boundary) return a.boundary.to_vector() < b.boundary.to_vector();
    return a.edges < b.edges;
  });
  return out;
}

// Replaces each lobe by its triangle: the minor contracting the branch-set
// trees and deleting the rest of the lobe. Boundary vertices keep their
// ids; unused interior vertices disappear.
inline BiasedGraph reduce(const BiasedGraph& w, const std::vector<Lobe>& lobes, EdgeSet* contracted = nullptr,
                          EdgeSet* deleted = nullptr) {
  EdgeSet c, d;
  for (const Lobe& l : lobes) {
    c |= l.contracted;
    d |= l.deleted;
  }
  MinorResult m = minor_with_map(w, c, d);
  const MultiGraph& g = w.graph();
  std::array<VertexId, kMaxIds> name{};
  name.fill(-1);
  for (VertexId v : g.vertices()) {
    VertexId rep = m.vertex_map[static_cast<std::size_t>(v)];
    bool interior = false;
    for (const Lobe& l : lobes) interior = interior || l.interior.contains(v);
    if (!interior) name[static_cast<std::size_t>(rep)] = v;
  }
  const MultiGraph& mg = m.graph.graph();
  const VertexSet used = mg.vertices_of(mg.edges());
  MultiGraph h;
  std::array<VertexId, kMaxIds> to{};
  to.fill(-1);
  for (VertexId rep : mg.vertices()) {
    VertexId target = name[static_cast<std::size_t>(rep)];
    if (target < 0) {
      if (used.contains(rep)) fail(ErrorCode::kInvariantViolation, "lobe interior survived the reduction");
      continue;
    }
    to[static_cast<std::size_t>(rep)] = target;
    h.add_vertex(target);
  }
  for (EdgeId e : mg.edges()) {
    Endpoints p = mg.ends(e);
    h.add_edge(e, to[static_cast<std::size_t>(p.u)], to[static_cast<std::size_t>(p.v)]);
  }
  if (contracted) *contracted = m.contracted;
  if (deleted) *deleted = m.deleted;
  const BiasedGraph& mb = m.graph;
  return BiasedGraph::from_predicate(std::move(h), [&](EdgeSet cyc) { return mb.is_balanced_cycle(cyc); }, false);
}

// A maximal family of pairwise edge-disjoint lobes, chosen greedily from
// the candidate order, and the reduced biased graph.
inline ReductionPlan find_lobes(const BiasedGraph& w, const Limits& limits = default_limits()) {
  const MultiGraph& g = w.graph();
  if (connectivity(g) < 3) fail(ErrorCode::kPrecondition, "graph is not 3-connected");
  if (!almost_balanced_witness(w)) fail(ErrorCode::kNotAlmostBalanced, "biased graph is not almost balanced");
  const Limits lifted = limits.with_ground(w.edges().size());
  if (!has_u24_minor(matroid_of(w), lifted)) {
    fail(ErrorCode::kPrecondition, "frame matroid is binary; with a balancing vertex this means graphic");
  }
  CommitAnalyzer commits(w, limits);
  ReductionPlan plan;
  plan.original = w;
  EdgeSet used;
  for (Lobe& l : lobe_candidates(w, commits)) {
    if (l.edges.intersects(used)) continue;
    used |= l.edges;
    plan.lobes.push_back(std::move(l));
  }
  plan.reduced = reduce(w, plan.lobes, &plan.contracted, &plan.deleted);
  return plan;
}

// ---------------------------------------------------------------------------
// H-enlargement

enum class TriangleShape { kBalanced, kPinched, kRolledUp, kContrabalancedTheta, kOther };

inline const char* triangle_shape_name(TriangleShape s) {
  switch (s) {
    case TriangleShape::kBalanced: return "balanced-triangle";
    case TriangleShape::kPinched: return "pinched-triangle";
    case TriangleShape::kRolledUp: return "rolled-up-triangle";
    case TriangleShape::kContrabalancedTheta: return "contrabalanced-theta";
    case TriangleShape::kOther: return "other";
  }
  return "?";
}

inline TriangleShape triangle_shape(const BiasedGraph& psi, const std::array<EdgeId, 3>& t) {
  const MultiGraph& g = psi.graph();
  int loops = 0;
  for (EdgeId e : t) loops += g.is_loop(e) ? 1 : 0;
  const VertexSet vs = g.vertices_of(EdgeSet{t[0], t[1], t[2]});
  if (loops == 0 && vs.size() == 3) return TriangleShape::kBalanced;
  if (loops == 0 && vs.size() == 2) return TriangleShape::kContrabalancedTheta;
  if (loops == 1 && vs.size() == 2) return TriangleShape::kPinched;
  if (loops == 2 && vs.size() == 2) return TriangleShape::kRolledUp;
  return TriangleShape::kOther;
}

// Replaces each lobe's triangle in ψ by a copy of the lobe glued at the
// triangle's corners: a pinched triangle identifies two roots, and a
// rolled-up triangle rolls the edges at the root opposite its link. The
// bias is read off F(Ω) and the result is checked against it.
inline BiasedGraph h_enlarge(const ReductionPlan& plan, const BiasedGraph& psi) {
  if (psi.edges() != plan.reduced.edges()) {
    fail(ErrorCode::kGroundMismatch, "ψ must carry exactly the elements of the reduced graph");
  }
  if (!matroid_equal(matroid_of(psi), matroid_of(plan.reduced))) {
    fail(ErrorCode::kPrecondition, "ψ does not represent the frame matroid of the reduced graph");
  }
  const MultiGraph& pg = psi.graph();
  MultiGraph out;
  for (VertexId v : pg.vertices()) out.add_vertex(v);
  EdgeSet triangles;
  for (const Lobe& l : plan.lobes) triangles |= EdgeSet{l.triangle[0], l.triangle[1], l.triangle[2]};
  for (EdgeId e : pg.edges() - triangles) out.add_edge(e, pg.ends(e).u, pg.ends(e).v);

  for (const Lobe& l : plan.lobes) {
    const TriangleShape shape = triangle_shape(psi, l.triangle);
    if (shape == TriangleShape::kContrabalancedTheta || shape == TriangleShape::kOther) {
      fail(ErrorCode::kCircuitShapeUnsupported,
           std::string("lobe triangle ") + describe(EdgeSet{l.triangle[0], l.triangle[1], l.triangle[2]}) +
               " appears as a " + triangle_shape_name(shape));
    }
    VertexId loop_vertex = -1;
    for (EdgeId e : l.triangle) {
      if (pg.is_loop(e) && shape == TriangleShape::kPinched) loop_vertex = pg.ends(e).u;
    }
    auto corner = [&](EdgeId e, EdgeId f) -> VertexId {
      const VertexSet common = pg.vertices_of(EdgeSet::single(e)) & pg.vertices_of(EdgeSet::single(f));
      if (common.size() == 1) return common.first();
      if (common.size() == 2) return (common - VertexSet::single(loop_vertex)).first();
      return -1;
    };
    const EdgeId a = l.triangle[0], b = l.triangle[1], c = l.triangle[2];
    // v_A = roots[0] sits at a ∩ c, v_B = roots[1] at a ∩ b, v_C = roots[2] at b ∩ c.
    const std::array<VertexId, 3> at{corner(a, c), corner(a, b), corner(b, c)};
    std::array<VertexId, kMaxIds> to{};
    to.fill(-1);
    for (VertexId v : l.pattern.vertices()) {
      int root = -1;
      for (int i = 0; i < 3; ++i) {
        if (l.roots[static_cast<std::size_t>(i)] == v) root = i;
      }
      if (root >= 0) {
        to[static_cast<std::size_t>(v)] = at[static_cast<std::size_t>(root)];
      } else {
        to[static_cast<std::size_t>(v)] = out.add_fresh_vertex();
      }
    }
    for (EdgeId e : l.pattern.edges()) {
      Endpoints p = l.pattern.ends(e);
      VertexId x = to[static_cast<std::size_t>(p.u)], y = to[static_cast<std::size_t>(p.v)];
      if (x < 0 && y < 0) fail(ErrorCode::kInvariantViolation, "edge joins two rolled corners");
      if (x < 0) x = y;
      if (y < 0) y = x;
      out.add_edge(e, x, y);
    }
  }
  const BiasedGraph& w = plan.original;
  auto is_circuit_of_original = [&](EdgeSet cyc) {
    if (!cyc.subset_of(w.edges())) return false;
    if (rank(w, cyc) != cyc.size() - 1) return false;
    for (EdgeId e : cyc) {
      if (rank(w, cyc - EdgeSet::single(e)) != cyc.size() - 1) return false;
    }
    return true;
  };
  BiasedGraph result;
  try {
    result = BiasedGraph::from_predicate(std::move(out), is_circuit_of_original, true);
  } catch (const Error& e) {
    fail(ErrorCode::kInvariantViolation, std::string("enlargement is not a biased graph: ") + e.what());
  }
  if (!matroid_equal(matroid_of(result), matroid_of(w))) {
    fail(ErrorCode::kInvariantViolation, "enlargement does not represent the original frame matroid");
  }
  return result;
}

}  // namespace biasforge

#endif  // BIASFORGE_ANALYSIS_HPP_
