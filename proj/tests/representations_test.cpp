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

#include <set>

#include "biasforge/representations.hpp"
#include "test_support.hpp"

namespace biasforge {
namespace {

using testing::make_graph;

std::array<VertexId, kMaxIds> shuffled_vertices(testing::Rng& rng, const MultiGraph& g) {
  std::vector<VertexId> vs = g.vertices().to_vector();
  std::vector<VertexId> to = vs;
  for (VertexId& v : to) v += 30;
  std::shuffle(to.begin(), to.end(), rng);
  std::array<VertexId, kMaxIds> map{};
  for (std::size_t i = 0; i < vs.size(); ++i) map[static_cast<std::size_t>(vs[i])] = to[i];
  return map;
}

std::set<LabeledKey> keys_of(const std::vector<BiasedGraph>& ws) {
  std::set<LabeledKey> out;
  for (const BiasedGraph& w : ws) out.insert(canonical_labeling(w.graph()).key);
  return out;
}

// ---------------------------------------------------------------------------

TEST(CanonicalLabeling, InvariantUnderVertexRelabeling) {
  testing::Rng rng(21);
  for (int trial = 0; trial < 60; ++trial) {
    MultiGraph g = testing::random_connected_graph(rng, 5, 8, 0.2);
    MultiGraph h = relabel_vertices(g, shuffled_vertices(rng, g));
    EXPECT_EQ(canonical_labeling(g).key, canonical_labeling(h).key) << "trial " << trial;
  }
}

TEST(CanonicalLabeling, RelabelReproducesKeyAndSeparatesDistinctGraphs) {
  MultiGraph path = make_graph(3, {{0, 1}, {1, 2}});
  MultiGraph bent = make_graph(3, {{0, 1}, {0, 2}});
  MultiGraph cherry = make_graph(3, {{1, 0}, {1, 2}});
  EXPECT_EQ(canonical_labeling(path).key, canonical_labeling(cherry).key);
  EXPECT_EQ(canonical_labeling(path).key, canonical_labeling(bent).key);
  MultiGraph digon = make_graph(3, {{0, 1}, {0, 1}});
  EXPECT_NE(canonical_labeling(path).key, canonical_labeling(digon).key);
  CanonicalLabeling cl = canonical_labeling(cherry);
  MultiGraph moved = relabel_vertices(cherry, cl.relabel);
  LabeledKey direct;
  for (EdgeId e : moved.edges()) {
    Endpoints p = moved.ends(e);
    direct.emplace_back(std::min(p.u, p.v), std::max(p.u, p.v));
  }
  EXPECT_EQ(direct, cl.key);
  EXPECT_EQ(cl.key, (LabeledKey{{0, 1}, {0, 2}}));
}

TEST(CanonicalForm, KeepsBias) {
  testing::Rng rng(4);
  for (int trial = 0; trial < 20; ++trial) {
    MultiGraph g = testing::random_connected_graph(rng, 4, 7, 0.2);
    BiasedGraph w = testing::random_gain_graph(rng, g, 3);
    EXPECT_TRUE(matroid_equal(matroid_of(w), matroid_of(canonical_form(w))));
  }
}

// ---------------------------------------------------------------------------

TEST(LabeledRepresentations, U24HasElevenOnTwoVertices) {
  const Matroid target = Matroid::uniform(2, EdgeSet{0, 1, 2, 3});
  std::vector<BiasedGraph> reps = labeled_representations(target, RepresentationQuery{2});
  EXPECT_EQ(reps.size(), 11u);
  for (const BiasedGraph& w : reps) {
    EXPECT_EQ(w.graph().vertices().size(), 2);
    EXPECT_TRUE(matroid_equal(matroid_of(w), target));
  }
  EXPECT_EQ(keys_of(reps).size(), reps.size());
}

TEST(LabeledRepresentations, MaxResultsStopsEarly) {
  RepresentationQuery q{2};
  q.max_results = 3;
  EXPECT_EQ(labeled_representations(Matroid::uniform(2, EdgeSet{0, 1, 2, 3}), q).size(), 3u);
}

TEST(LabeledRepresentations, ThreeConnectedGraphHasOneBalancedLabeling) {
  RepresentationQuery q{4};
  q.balanced_only = true;
  std::vector<BiasedGraph> reps = labeled_representations(cycle_matroid(testing::complete_graph(4)), q);
  ASSERT_EQ(reps.size(), 1u);
  EXPECT_EQ(canonical_labeling(reps[0].graph()).key, canonical_labeling(testing::complete_graph(4)).key);
}

TEST(LabeledRepresentations, MatchesNaiveOracleOnRandomBiasedGraphs) {
  testing::Rng rng(77);
  int compared = 0;
  for (int trial = 0; trial < 25; ++trial) {
    MultiGraph g = testing::random_connected_graph(rng, 3, 6, 0.2);
    BiasedGraph w = testing::random_gain_graph(rng, g, 3);
    const Matroid target = matroid_of(w);
    const int n = target.rank();
    if (n < 1 || n > 3) continue;
    std::set<LabeledKey> naive;
    for (const MultiGraph& h : testing::naive_representations(target.ground(), n, [&](EdgeSet x) {
           return target.rank(x);
         })) {
      naive.insert(canonical_labeling(h).key);
    }
    EXPECT_EQ(keys_of(labeled_representations(target, RepresentationQuery{n})), naive) << "trial " << trial;
    ++compared;
  }
  EXPECT_GE(compared, 10);
}

// ---------------------------------------------------------------------------

TEST(GraphicOracle, FindsGraphsForCycleMatroids) {
  testing::Rng rng(12);
  for (int trial = 0; trial < 15; ++trial) {
    MultiGraph g = testing::random_connected_graph(rng, 5, 8, 0.1);
    const Matroid m = cycle_matroid(g);
    auto h = is_graphic_bruteforce(m);
    ASSERT_TRUE(h.has_value()) << "trial " << trial;
    EXPECT_TRUE(matroid_equal(cycle_matroid(*h), m));
  }
}

TEST(GraphicOracle, RejectsNongraphicMatroids) {
  EXPECT_FALSE(is_graphic_bruteforce(Matroid::uniform(2, EdgeSet{0, 1, 2, 3})).has_value());
  EXPECT_FALSE(is_graphic_bruteforce(matroid_of(BiasedGraph::contrabalanced(testing::complete_graph(4)))).has_value());
  EXPECT_TRUE(is_graphic_bruteforce(Matroid::uniform(2, EdgeSet{0, 1, 2})).has_value());
}

TEST(GraphicOracle, PinchIsGraphic) {
  MultiGraph k4 = testing::complete_graph(4);
  auto h = is_graphic_bruteforce(matroid_of(pinch(k4, 0, 1)));
  ASSERT_TRUE(h.has_value());
  EXPECT_TRUE(matroid_equal(cycle_matroid(*h), cycle_matroid(k4)));
}

TEST(GraphicOracle, CapEnforced) {
  Matroid big = cycle_matroid(testing::complete_graph(6));
  try {
    is_graphic_bruteforce(big);
    ADD_FAILURE() << "expected a cap error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kCapExceeded);
  }
  EXPECT_TRUE(is_graphic_bruteforce(big, default_limits().with_ground(15)).has_value());
}

}  // namespace
}  // namespace biasforge
