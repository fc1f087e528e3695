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

#ifndef BIASFORGE_FIXTURES_HPP_
#define BIASFORGE_FIXTURES_HPP_

#include <string>
#include <vector>

#include "biasforge/document.hpp"

namespace biasforge {

struct Fixture {
  const char* name;
  const char* summary;
  const char* text;  // document in the text format
};

// Built-in biased graphs; the files under fixtures/ hold the same documents.
inline const std::vector<Fixture>& fixture_library() {
  static const std::vector<Fixture> kFixtures = {
      {"rollup_omega0", "apex over K4 with unbalanced loops at 2 and 4",
       R"bg(vertices 0 1 2 3 4
edge 0 1 2
edge 1 1 3
edge 2 1 4
edge 3 2 3
edge 4 2 4
edge 5 3 4
edge 6 0 1
edge 7 0 2
edge 8 0 3
edge 9 0 4
edge 10 0 1
edge 11 0 3
edge 12 2 2
edge 13 4 4
bias signature
class 6 7
class 8 9
class 10 11
class 12 13
)bg"},
      {"rollup_omega", "the loops of rollup_omega0 unrolled to links at 0",
       R"bg(vertices 0 1 2 3 4
edge 0 1 2
edge 1 1 3
edge 2 1 4
edge 3 2 3
edge 4 2 4
edge 5 3 4
edge 6 0 1
edge 7 0 2
edge 8 0 3
edge 9 0 4
edge 10 0 1
edge 11 0 3
edge 12 0 2
edge 13 0 4
bias signature
class 6 7
class 8 9
class 10 11
class 12 13
)bg"},
      {"rollup_omega2", "rollup_omega with the class {8 9} rolled up",
       R"bg(vertices 0 1 2 3 4
edge 0 1 2
edge 1 1 3
edge 2 1 4
edge 3 2 3
edge 4 2 4
edge 5 3 4
edge 6 0 1
edge 7 0 2
edge 8 3 3
edge 9 4 4
edge 10 0 1
edge 11 0 3
edge 12 0 2
edge 13 0 4
bias signature
class 6 7
class 8 9
class 10 11
class 12 13
)bg"},
      {"u24_four_links", "U(2,4): four contrabalanced links",
       R"bg(vertices 0 1
edge 0 0 1
edge 1 0 1
edge 2 0 1
edge 3 0 1
bias contrabalanced
)bg"},
      {"u24_three_links_loop", "U(2,4): three contrabalanced links and a loop",
       R"bg(vertices 0 1
edge 0 0 1
edge 1 0 1
edge 2 0 1
edge 3 0 0
bias contrabalanced
)bg"},
      {"u24_two_links_two_loops", "U(2,4): two contrabalanced links and a loop at each end",
       R"bg(vertices 0 1
edge 0 0 1
edge 1 0 1
edge 2 0 0
edge 3 1 1
bias contrabalanced
)bg"},
      {"cographic_k33", "signed graph whose frame matroid is the dual of M(K3,3); edge i is edge i of K3,3 on parts {0 1 2}, {3 4 5} in lexicographic order",
       R"bg(vertices 0 1 2 3
edge 0 0 1
edge 1 0 2
edge 2 1 2
edge 3 0 2
edge 4 0 3
edge 5 2 3
edge 6 1 2
edge 7 2 3
edge 8 1 3
bias signature
class 3 5 6 8
)bg"},
      {"cographic_k5", "signed graph whose frame matroid is the dual of M(K5); edge i is edge i of K5 in lexicographic order",
       R"bg(vertices 0 1 2 3 4 5
edge 0 0 1
edge 1 0 2
edge 2 1 3
edge 3 2 3
edge 4 0 3
edge 5 1 4
edge 6 3 4
edge 7 3 5
edge 8 2 5
edge 9 4 5
bias signature
class 4 6 8
)bg"},
      {"lobe_example", "balanced lobe on {0 1 2} with interior {3 4}; 0 is balancing",
       R"bg(vertices 0 1 2 3 4
edge 0 0 3
edge 1 0 4
edge 2 1 3
edge 3 1 4
edge 4 2 4
edge 5 3 4
edge 6 2 3
edge 7 0 1
edge 8 0 1
edge 9 0 2
edge 10 0 2
bias signature
class 0 1
class 7 9
class 8 10
)bg"},
      {"lobe_example_reduced", "lobe_example with its lobe replaced by the balanced triangle 0 4 6",
       R"bg(vertices 0 1 2
edge 0 0 1
edge 4 0 2
edge 6 1 2
edge 7 0 1
edge 8 0 1
edge 9 0 2
edge 10 0 2
bias signature
class 0 4
class 7 9
class 8 10
)bg"},
      {"lobe_psi1", "representation of F(lobe_example_reduced); lobe triangle is a rolled-up-triangle",
       R"bg(vertices 0 1 2
edge 0 0 0
edge 4 1 1
edge 6 0 1
edge 7 0 2
edge 8 0 2
edge 9 1 2
edge 10 1 2
bias signature
class 0 4 8 10
)bg"},
      {"lobe_omega1", "enlargement of lobe_psi1 by the lobe of lobe_example",
       R"bg(vertices 0 1 2 3 4
edge 0 3 3
edge 1 4 4
edge 2 0 3
edge 3 0 4
edge 4 1 4
edge 5 3 4
edge 6 1 3
edge 7 0 2
edge 8 0 2
edge 9 1 2
edge 10 1 2
bias signature
class 0 1 8 10
)bg"},
      {"lobe_psi2", "representation of F(lobe_example_reduced); lobe triangle is a balanced-triangle",
       R"bg(vertices 0 1 2
edge 0 0 1
edge 4 0 2
edge 6 1 2
edge 7 0 1
edge 8 1 1
edge 9 0 2
edge 10 2 2
bias signature
class 7 8 9 10
)bg"},
      {"lobe_omega2", "enlargement of lobe_psi2 by the lobe of lobe_example",
       R"bg(vertices 0 1 2 3 4
edge 0 0 3
edge 1 0 4
edge 2 1 3
edge 3 1 4
edge 4 2 4
edge 5 3 4
edge 6 2 3
edge 7 0 1
edge 8 1 1
edge 9 0 2
edge 10 2 2
bias signature
class 7 8 9 10
)bg"},
      {"lobe_psi3", "representation of F(lobe_example_reduced); lobe triangle is a balanced-triangle",
       R"bg(vertices 0 1 2
edge 0 0 1
edge 4 0 2
edge 6 1 2
edge 7 0 2
edge 8 1 2
edge 9 0 1
edge 10 1 2
bias cycles
cycle 0 4 6
cycle 0 7 8
cycle 6 7 9
cycle 4 9 10
)bg"},
      {"lobe_omega3", "enlargement of lobe_psi3 by the lobe of lobe_example",
       R"bg(vertices 0 1 2 3 4
edge 0 0 3
edge 1 0 4
edge 2 1 3
edge 3 1 4
edge 4 2 4
edge 5 3 4
edge 6 2 3
edge 7 0 2
edge 8 1 2
edge 9 0 1
edge 10 1 2
bias cycles
cycle 0 1 2 3
cycle 0 1 5
cycle 2 3 5
cycle 0 1 4 6
cycle 2 3 4 6
cycle 4 5 6
cycle 0 2 7 8
cycle 1 3 7 8
cycle 1 2 5 7 8
cycle 0 3 5 7 8
cycle 3 4 7 9
cycle 2 4 5 7 9
cycle 2 6 7 9
cycle 3 5 6 7 9
cycle 1 4 9 10
cycle 0 4 5 9 10
cycle 0 6 9 10
cycle 1 5 6 9 10
)bg"},
      {"lobe_psi4", "representation of F(lobe_example_reduced); lobe triangle is a balanced-triangle",
       R"bg(vertices 0 1 2
edge 0 0 1
edge 4 0 2
edge 6 1 2
edge 7 1 1
edge 8 0 1
edge 9 2 2
edge 10 0 2
bias signature
class 7 8 9 10
)bg"},
      {"lobe_omega4", "enlargement of lobe_psi4 by the lobe of lobe_example",
       R"bg(vertices 0 1 2 3 4
edge 0 0 3
edge 1 0 4
edge 2 1 3
edge 3 1 4
edge 4 2 4
edge 5 3 4
edge 6 2 3
edge 7 1 1
edge 8 0 1
edge 9 2 2
edge 10 0 2
bias signature
class 7 8 9 10
)bg"},
      {"apex_k4_3", "vertex 0 joined to K4 on 1..4 once per class, three classes",
       R"bg(vertices 0 1 2 3 4
edge 0 1 2
edge 1 1 3
edge 2 1 4
edge 3 2 3
edge 4 2 4
edge 5 3 4
edge 6 0 1
edge 7 0 2
edge 8 0 3
edge 9 0 4
edge 10 0 1
edge 11 0 2
edge 12 0 3
edge 13 0 4
edge 14 0 1
edge 15 0 2
edge 16 0 3
edge 17 0 4
bias signature
class 6 7 8 9
class 10 11 12 13
class 14 15 16 17
)bg"},
      {"apex_k5_3", "vertex 0 joined to K5 on 1..5 once per class, three classes",
       R"bg(vertices 0 1 2 3 4 5
edge 0 1 2
edge 1 1 3
edge 2 1 4
edge 3 1 5
edge 4 2 3
edge 5 2 4
edge 6 2 5
edge 7 3 4
edge 8 3 5
edge 9 4 5
edge 10 0 1
edge 11 0 2
edge 12 0 3
edge 13 0 4
edge 14 0 5
edge 15 0 1
edge 16 0 2
edge 17 0 3
edge 18 0 4
edge 19 0 5
edge 20 0 1
edge 21 0 2
edge 22 0 3
edge 23 0 4
edge 24 0 5
bias signature
class 10 11 12 13 14
class 15 16 17 18 19
class 20 21 22 23 24
)bg"},
      {"case_pinch_lobe", "pinch of K4 at 0 and 3 plus an unbalanced loop at 1; a single pinch lobe",
       R"bg(vertices 0 1 2
edge 0 0 1
edge 1 0 2
edge 2 0 1
edge 3 0 2
edge 4 1 2
edge 5 0 0
edge 6 1 1
bias signature
class 2 3 5 6
)bg"},
      {"case_lobe_off_balancing_vertex", "balanced lobe on {1 2 3} with interior {4}, away from the balancing vertex 0",
       R"bg(vertices 0 1 2 3 4
edge 0 0 3
edge 1 1 3
edge 2 1 4
edge 3 2 4
edge 4 3 4
edge 5 2 3
edge 6 0 1
edge 7 0 1
edge 8 0 2
edge 9 0 2
edge 10 1 2
bias signature
class 0
class 6 8
class 7 9
)bg"},
      {"case_three_classes", "three classes at 0 with a balanced lobe on {1 2 3}",
       R"bg(vertices 0 1 2 3 4 5
edge 0 0 3
edge 1 1 3
edge 2 1 4
edge 3 2 4
edge 4 3 4
edge 5 2 3
edge 6 0 5
edge 7 1 5
edge 8 2 5
edge 9 0 1
edge 10 0 2
bias signature
class 0
class 6
class 9 10
)bg"},
  };
  return kFixtures;
}

inline const Fixture& find_fixture(const std::string& name) {
  for (const Fixture& f : fixture_library()) {
    if (name == f.name) return f;
  }
  fail(ErrorCode::kUsage, "unknown fixture '" + name + "'");
}

inline Document fixture_document(const std::string& name) { return parse_document(find_fixture(name).text); }

inline BiasedGraph fixture(const std::string& name, const Limits& limits = default_limits()) {
  return fixture_document(name).to_biased(limits);
}

}  // namespace biasforge

#endif  // BIASFORGE_FIXTURES_HPP_
