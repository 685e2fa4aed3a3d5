// Copyright 2026 The WGP Authors
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

#ifndef WGP_TESTS_SUPPORT_BUILDERS_H_
#define WGP_TESTS_SUPPORT_BUILDERS_H_

#include <vector>

#include "wgp/model.h"

namespace wgp::testing {

// Path 0-1-...-(n-1) with the sink at 0.
inline Network Line(int n, int radius = 1) {
  std::vector<Edge> edges;
  for (int v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
  return Network(n, edges, 0, radius);
}

// Center 0 (the sink) with leaves 1..leaves.
inline Network Star(int leaves, int radius = 1) {
  std::vector<Edge> edges;
  for (int v = 1; v <= leaves; ++v) edges.push_back({0, v});
  return Network(leaves + 1, edges, 0, radius);
}

// o-a-s as 2-1-0 with two packets at o released at 0.
inline Instance TwoPacketPath() {
  return Instance(Line(3), {{2, 0}, {2, 0}});
}

// One packet at each leaf of a 3-leaf star, all released at 0.
inline Instance ThreeLeafStar() {
  return Instance(Star(3), {{1, 0}, {2, 0}, {3, 0}});
}

}  // namespace wgp::testing

#endif  // WGP_TESTS_SUPPORT_BUILDERS_H_
