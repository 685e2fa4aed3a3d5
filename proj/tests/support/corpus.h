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

// Seeded corpus of small random instances shared by the property and
// acceptance suites.

#ifndef WGP_TESTS_SUPPORT_CORPUS_H_
#define WGP_TESTS_SUPPORT_CORPUS_H_

#include <cstdint>
#include <vector>

#include "wgp/generators.h"
#include "wgp/model.h"

namespace wgp::testing {

struct CorpusEntry {
  std::uint64_t seed = 0;
  Instance instance;
};

// Instance i: random graph on 3..8 nodes, d_I in {1, 2}, 1..4 packets at
// uniform origins, releases all zero or spaced.
inline StandardParams CorpusParams(int i) {
  StandardParams params;
  params.topology = Topology::kRandom;
  params.nodes = 3 + i % 6;
  params.interference_radius = 1 + (i / 6) % 2;
  params.packets = 1 + (i / 12) % 4;
  params.edge_probability = (i / 48) % 2 == 0 ? 0.35 : 0.6;
  params.origin = OriginPolicy::kUniform;
  params.release = (i / 96) % 2 == 0 ? ReleasePolicy::kSpaced
                                     : ReleasePolicy::kZero;
  params.mean_gap = 1.5;
  return params;
}

inline std::vector<CorpusEntry> RandomCorpus(int count,
                                             std::uint64_t base_seed = 1000) {
  std::vector<CorpusEntry> corpus;
  corpus.reserve(count);
  for (int i = 0; i < count; ++i) {
    const std::uint64_t seed = base_seed + i;
    corpus.push_back({seed, GenerateStandard(CorpusParams(i), seed)});
  }
  return corpus;
}

}  // namespace wgp::testing

#endif  // WGP_TESTS_SUPPORT_CORPUS_H_
