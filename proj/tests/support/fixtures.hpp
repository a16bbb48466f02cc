#pragma once

#include <string>
#include <vector>

#include "balgraph/labelings.hpp"

namespace fixtures {

using balgraph::MultiGraph;

MultiGraph triangle();         // 1,2,3; a:1-2 b:2-3 c:3-1
MultiGraph b3();               // 1,2; three parallel edges a,b,c
MultiGraph k4();               // 1..4; a:12 b:13 c:14 d:23 e:24 f:34
MultiGraph bowtie_on_edge();   // u,v,p,q; x:uv a:up b:pv c:uq d:vq
MultiGraph loop1();            // v; loop l
MultiGraph bowtie_at_vertex(); // two triangles sharing w

/// Builds a graph from "u-w" pairs; edge ids are e0, e1, ...
MultiGraph from_pairs(std::size_t n, const std::vector<std::pair<int, int>>& edges);

balgraph::EdgeLabeling edges_of(const balgraph::FiniteAbelianGroup& A, const std::vector<std::int64_t>& values);
balgraph::VertexLabeling vertices_of(const balgraph::FiniteAbelianGroup& A, const std::vector<std::int64_t>& values);

}  // namespace fixtures
