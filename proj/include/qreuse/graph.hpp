// Copyright 2026 The qreuse Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace qreuse {

/// Undirected simple graph. Edges are stored with u < v, sorted.
struct Graph {
    uint32_t num_vertices = 0;
    std::vector<std::pair<uint32_t, uint32_t>> edges;
    std::vector<double> weights;

    std::vector<uint32_t> degrees() const;
    bool operator==(const Graph &other) const = default;
};

/// Builds a graph from an edge list, normalizing (u, v) to u < v and sorting.
/// Throws std::invalid_argument on self-loops, duplicates, or out-of-range
/// vertices. All weights are 1.
Graph make_graph(uint32_t num_vertices, std::vector<std::pair<uint32_t, uint32_t>> edges);

/// Complete graph on n vertices.
Graph complete_graph(uint32_t n);

}  // namespace qreuse
