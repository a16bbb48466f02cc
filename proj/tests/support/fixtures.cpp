#include "fixtures.hpp"

namespace fixtures {

using balgraph::parse_graph;

MultiGraph triangle() {
    return parse_graph("vertex 1\nvertex 2\nvertex 3\nedge a 1 2\nedge b 2 3\nedge c 3 1\n");
}

MultiGraph b3() { return parse_graph("vertex 1\nvertex 2\nedge a 1 2\nedge b 1 2\nedge c 1 2\n"); }

MultiGraph k4() {
    return parse_graph(
        "vertex 1\nvertex 2\nvertex 3\nvertex 4\n"
        "edge a 1 2\nedge b 1 3\nedge c 1 4\nedge d 2 3\nedge e 2 4\nedge f 3 4\n");
}

MultiGraph bowtie_on_edge() {
    return parse_graph(
        "vertex u\nvertex v\nvertex p\nvertex q\n"
        "edge x u v\nedge a u p\nedge b p v\nedge c u q\nedge d v q\n");
}

MultiGraph loop1() { return parse_graph("vertex v\nedge l v v\n"); }

MultiGraph bowtie_at_vertex() {
    return parse_graph(
        "vertex w\nvertex a\nvertex b\nvertex c\nvertex d\n"
        "edge wa w a\nedge ab a b\nedge bw b w\nedge wc w c\nedge cd c d\nedge dw d w\n");
}

MultiGraph from_pairs(std::size_t n, const std::vector<std::pair<int, int>>& edges) {
    MultiGraph::Builder b;
    for (std::size_t v = 0; v < n; ++v) b.add_vertex(std::to_string(v));
    for (std::size_t i = 0; i < edges.size(); ++i)
        b.add_edge("e" + std::to_string(i), std::to_string(edges[i].first), std::to_string(edges[i].second));
    return std::move(b).build();
}

balgraph::EdgeLabeling edges_of(const balgraph::FiniteAbelianGroup& A, const std::vector<std::int64_t>& values) {
    balgraph::EdgeLabeling f;
    for (auto v : values) f.values.push_back(A.element({v}));
    return f;
}

balgraph::VertexLabeling vertices_of(const balgraph::FiniteAbelianGroup& A, const std::vector<std::int64_t>& values) {
    balgraph::VertexLabeling g;
    for (auto v : values) g.values.push_back(A.element({v}));
    return g;
}

}  // namespace fixtures
