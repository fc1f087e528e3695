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

#include <gtest/gtest.h>

#include "test_support.hpp"

namespace biasforge {
namespace {

using testing::complete_graph;
using testing::make_graph;
using testing::parallel_links;

// Identifies u and v (keeping u) and signs the edges that were at u.
BiasedGraph pinch_by_hand(const MultiGraph& h, VertexId u, VertexId v) {
  MultiGraph g;
  for (VertexId x : h.vertices()) {
    if (x != v) g.add_vertex(x);
  }
  EdgeSet sigma;
  for (EdgeId e : h.edges()) {
    Endpoints p = h.ends(e);
    if (p.touches(u)) sigma.insert(e);
    g.add_edge(e, p.u == v ? u : p.u, p.v == v ? u : p.v);
  }
  return BiasedGraph::from_signature(g, Signature({sigma}));
}

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::kInvariantViolation;
}

TEST(FromBalancedCycles, Examples) {
  BiasedGraph tri = BiasedGraph::from_balanced_cycles(complete_graph(3), {EdgeSet{0, 1, 2}});
  EXPECT_TRUE(tri.is_balanced());
  BiasedGraph one = BiasedGraph::from_balanced_cycles(parallel_links(3), {EdgeSet{0, 1}});
  EXPECT_EQ(one.balanced_cycles().size(), 1u);
  EXPECT_EQ(code_of([] { BiasedGraph::from_balanced_cycles(parallel_links(3), {EdgeSet{0, 1}, EdgeSet{0, 2}}); }),
            ErrorCode::kThetaViolation);
  EXPECT_EQ(code_of([] { BiasedGraph::from_balanced_cycles(complete_graph(3), {EdgeSet{0, 1}}); }),
            ErrorCode::kNotACycle);
}

TEST(FromSignature, EmptySignatureBalancesEverything) {
  BiasedGraph w = BiasedGraph::from_signature(complete_graph(4), Signature());
  EXPECT_TRUE(w.is_balanced());
}

TEST(FromSignature, SingletonClassesOnFourLinksAreContrabalanced) {
  BiasedGraph w = BiasedGraph::from_signature(parallel_links(4), Signature({{0}, {1}, {2}, {3}}));
  EXPECT_TRUE(w.is_contrabalanced());
  EXPECT_EQ(w.cycles().size(), 6u);
}

TEST(FromSignature, PinchSignatureBalancesCyclesAvoidingOneStar) {
  MultiGraph h = complete_graph(4);
  BiasedGraph w = pinch_by_hand(h, 0, 1);
  for (EdgeSet c : w.cycles()) {
    bool meets_u = false, meets_v = false;
    for (EdgeId e : c) {
      meets_u = meets_u || h.ends(e).touches(0);
      meets_v = meets_v || h.ends(e).touches(1);
    }
    EXPECT_EQ(w.is_balanced_cycle(c), !(meets_u && meets_v)) << describe(c);
  }
}

TEST(FromSignature, RandomSignaturesAndGainsSatisfyThetaProperty) {
  testing::Rng rng(21);
  for (int trial = 0; trial < 300; ++trial) {
    int n = 1 + static_cast<int>(rng() % 7);
    int m = std::max(n - 1, 1) + static_cast<int>(rng() % 8);
    MultiGraph g = testing::random_connected_graph(rng, n, m);
    BiasedGraph a = BiasedGraph::from_signature(g, testing::random_signature(rng, g, 1 + static_cast<int>(rng() % 3)));
    BiasedGraph b = testing::random_gain_graph(rng, g, 2 + static_cast<int>(rng() % 3));
    for (const BiasedGraph* w : {&a, &b}) {
      for (const Theta& t : theta_subgraphs(g)) {
        int balanced = 0;
        for (EdgeSet c : t.cycles) balanced += w->is_balanced_cycle(c) ? 1 : 0;
        ASSERT_NE(balanced, 2);
      }
    }
  }
}

TEST(IsBalancedCycle, LoopsAndNonCycles) {
  BiasedGraph w = BiasedGraph::contrabalanced(make_graph(1, {{0, 0}, {0, 0}}));
  EXPECT_FALSE(w.is_balanced_cycle(EdgeSet{0}));
  EXPECT_EQ(code_of([&] { w.is_balanced_cycle(EdgeSet{0, 1}); }), ErrorCode::kNotACycle);
}

TEST(IsBalancedCycle, ReroutingAlongBalancedCyclePreservesBias) {
  testing::Rng rng(22);
  for (int trial = 0; trial < 200; ++trial) {
    MultiGraph g = testing::random_connected_graph(rng, 5, 9, 0.0);
    BiasedGraph w = testing::random_gain_graph(rng, g, 3);
    for (const Theta& t : theta_subgraphs(g)) {
      for (int i = 0; i < 3; ++i) {
        if (!w.is_balanced_cycle(t.cycles[static_cast<std::size_t>(i)])) continue;
        EdgeSet c1 = t.cycles[static_cast<std::size_t>((i + 1) % 3)];
        EdgeSet c2 = t.cycles[static_cast<std::size_t>((i + 2) % 3)];
        ASSERT_EQ(w.is_balanced_cycle(c1), w.is_balanced_cycle(c2));
      }
    }
  }
}

TEST(BalancingVertices, Examples) {
  EXPECT_EQ(balancing_vertices(BiasedGraph::balanced(complete_graph(4))), (VertexSet{0, 1, 2, 3}));
  EXPECT_TRUE(balancing_vertices(pinch_by_hand(complete_graph(4), 0, 1)).contains(0));
  EXPECT_EQ(balancing_vertices(BiasedGraph::contrabalanced(parallel_links(4))), (VertexSet{0, 1}));
}

// Apex over K4 (vertices 1..4) with `classes` links from 0 to each base vertex.
BiasedGraph apex_over_k4(int classes) {
  MultiGraph g;
  for (int v = 0; v < 5; ++v) g.add_vertex(v);
  EdgeId next = 0;
  for (int a = 1; a <= 4; ++a) {
    for (int b = a + 1; b <= 4; ++b) g.add_edge(next++, a, b);
  }
  std::vector<EdgeSet> cs(static_cast<std::size_t>(classes));
  for (int c = 0; c < classes; ++c) {
    for (int v = 1; v <= 4; ++v) {
      cs[static_cast<std::size_t>(c)].insert(next);
      g.add_edge(next++, 0, v);
    }
  }
  return BiasedGraph::from_signature(g, Signature(cs));
}

TEST(UnbalancingClasses, ApexRecoversItsClasses) {
  for (int k = 1; k <= 3; ++k) {
    BiasedGraph w = apex_over_k4(k);
    UnbalancingPartition p = unbalancing_classes(w, 0);
    ASSERT_EQ(static_cast<int>(p.classes.size()), k);
    for (int c = 0; c < k; ++c) EXPECT_EQ(p.classes[static_cast<std::size_t>(c)].size(), 4);
  }
}

TEST(UnbalancingClasses, BalancedGraphHasOneClass) {
  UnbalancingPartition p = unbalancing_classes(BiasedGraph::balanced(complete_graph(4)), 2);
  ASSERT_EQ(p.classes.size(), 1u);
  EXPECT_EQ(p.classes[0].size(), 3);
}

TEST(UnbalancingClasses, PinchOfK4HasTwoClasses) {
  BiasedGraph w = pinch_by_hand(complete_graph(4), 0, 1);
  UnbalancingPartition p = unbalancing_classes(w, 0);
  ASSERT_EQ(p.classes.size(), 2u);
  EXPECT_EQ(p.classes[0], (EdgeSet{1, 2}));
  EXPECT_EQ(p.classes[1], (EdgeSet{3, 4}));
}

TEST(UnbalancingClasses, RejectsNonBalancingVertex) {
  BiasedGraph w = BiasedGraph::contrabalanced(complete_graph(4));
  EXPECT_EQ(code_of([&] { unbalancing_classes(w, 0); }), ErrorCode::kNotBalancing);
}

TEST(UnbalancingClasses, SameBiasForCyclesThroughTheSameLinkPair) {
  testing::Rng rng(23);
  for (int trial = 0; trial < 150; ++trial) {
    BiasedGraph w = testing::random_almost_balanced(rng, 5, 6, 5, 3, 0);
    const MultiGraph& g = w.graph();
    std::map<std::pair<EdgeId, EdgeId>, int> seen;
    for (EdgeSet c : w.cycles()) {
      EdgeSet at = c & g.links_at(0);
      if (at.size() != 2) continue;
      int bias = w.is_balanced_cycle(c) ? 1 : 0;
      auto [it, fresh] = seen.emplace(std::make_pair(at.first(), at.last()), bias);
      ASSERT_TRUE(fresh || it->second == bias);
    }
  }
}

TEST(IsSigned, Examples) {
  auto s = is_signed(BiasedGraph::balanced(complete_graph(4)));
  ASSERT_TRUE(s.has_value());
  EXPECT_TRUE(s->support().empty());
  EXPECT_FALSE(is_signed(BiasedGraph::contrabalanced(parallel_links(3))).has_value());
  BiasedGraph p = pinch_by_hand(complete_graph(4), 0, 1);
  auto ps = is_signed(p);
  ASSERT_TRUE(ps.has_value());
  EXPECT_EQ(BiasedGraph::from_signature(p.graph(), *ps), p);
}

TEST(IsSigned, SignedIffNoContrabalancedTheta) {
  testing::Rng rng(24);
  int signed_count = 0, unsigned_count = 0;
  for (int trial = 0; trial < 300; ++trial) {
    int n = 2 + static_cast<int>(rng() % 5);
    MultiGraph g = testing::random_connected_graph(rng, n, n + 3 + static_cast<int>(rng() % 4));
    BiasedGraph w = testing::random_gain_graph(rng, g, 2 + static_cast<int>(rng() % 3));
    bool contra_theta = false;
    for (const Theta& t : theta_subgraphs(g)) {
      bool all_unbalanced = true;
      for (EdgeSet c : t.cycles) all_unbalanced = all_unbalanced && !w.is_balanced_cycle(c);
      contra_theta = contra_theta || all_unbalanced;
    }
    auto s = is_signed(w);
    ASSERT_EQ(s.has_value(), !contra_theta) << "trial " << trial;
    if (s) {
      ASSERT_EQ(BiasedGraph::from_signature(g, *s), w);
      ++signed_count;
    } else {
      ++unsigned_count;
    }
  }
  EXPECT_GT(signed_count, 20);
  EXPECT_GT(unsigned_count, 20);
}

TEST(AlmostBalanced, Examples) {
  auto a = almost_balanced_witness(apex_over_k4(3));
  ASSERT_TRUE(a.has_value());
  EXPECT_TRUE(a->loops.empty());
  EXPECT_EQ(a->vertex, 0);

  MultiGraph g = make_graph(6, {{0, 1}, {1, 0}, {2, 3}, {3, 2}, {4, 5}, {5, 4}, {1, 2}, {3, 4}});
  BiasedGraph three = BiasedGraph::from_signature(g, Signature({{0, 2, 4}}));
  EXPECT_FALSE(almost_balanced_witness(three).has_value());

  MultiGraph looped = make_graph(3, {{0, 1}, {0, 2}, {1, 2}, {1, 1}, {2, 2}});
  auto b = almost_balanced_witness(BiasedGraph::from_signature(looped, Signature({{3, 4}})));
  ASSERT_TRUE(b.has_value());
  EXPECT_EQ(b->loops, (EdgeSet{3, 4}));
}

TEST(ClassSignature, ReproducesBiasAndToleratesDroppingAClass) {
  testing::Rng rng(25);
  for (int trial = 0; trial < 150; ++trial) {
    BiasedGraph w = testing::random_almost_balanced(rng, 5, 5, 6, 1 + static_cast<int>(rng() % 3),
                                                    static_cast<int>(rng() % 3));
    if (!balancing_vertices(w.without_edges(w.unbalanced_loops())).contains(0)) continue;
    Signature s = class_signature(w, 0);
    ASSERT_EQ(BiasedGraph::from_signature(w.graph(), s), w);
    for (std::size_t i = 1; i < s.classes().size(); ++i) {
      ASSERT_EQ(BiasedGraph::from_signature(w.graph(), s.without_class(i)), w);
    }
  }
}

}  // namespace
}  // namespace biasforge
