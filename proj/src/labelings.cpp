#include "balgraph/labelings.hpp"

#include <algorithm>
#include <stdexcept>

namespace balgraph {

namespace {

void check_values(const FiniteAbelianGroup& group, const std::vector<GroupElement>& values, std::size_t expected,
                  const char* what) {
    if (values.size() != expected)
        throw std::invalid_argument(std::string(what) + ": expected " + std::to_string(expected) + " values, got " +
                                    std::to_string(values.size()));
    for (const auto& a : values)
        if (!group.contains(a)) throw std::invalid_argument(std::string(what) + ": value is not an element of the group");
}

GroupElement edge_sum(const FiniteAbelianGroup& group, const EdgeLabeling& f, const std::vector<EdgeIndex>& edges) {
    GroupElement s = group.zero();
    for (auto e : edges) s = group.add(s, f.values[e]);
    return s;
}

}  // namespace

std::string_view to_string(LabelingKind kind) {
    switch (kind) {
        case LabelingKind::H: return "H";
        case LabelingKind::B: return "B";
        case LabelingKind::W: return "W";
    }
    return "?";
}

LabelingKind parse_labeling_kind(std::string_view text) {
    if (text == "H" || text == "h") return LabelingKind::H;
    if (text == "B" || text == "b") return LabelingKind::B;
    if (text == "W" || text == "w") return LabelingKind::W;
    throw std::invalid_argument("expected one of H, B, W");
}

GroupElement trail_value(const FiniteAbelianGroup& group, const FullLabeling& h, const Ttrail& p) {
    GroupElement s = group.zero();
    for (std::size_t i = 0; i < p.edges.size(); ++i) {
        s = group.add(s, h.vertices.values[p.vertices[i]]);
        s = group.add(s, h.edges.values[p.edges[i]]);
    }
    return s;
}

GroupElement trail_value(const FiniteAbelianGroup& group, const EdgeLabeling& f, const Ttrail& p) {
    return edge_sum(group, f, p.edges);
}

BalanceFrame::BalanceFrame(MultiGraph g)
    : graph_(std::move(g)), basis_(basis_extension(graph_)), basis_system_(IntMatrix()), balancing_system_(IntMatrix()) {
    for (VertexIndex v = 0; v < graph_.vertex_count(); ++v)
        if (rep_of(v) != v) non_reps_.push_back(v);

    const std::size_t m = graph_.edge_count();
    auto row_of = [m](const std::vector<EdgeIndex>& edges, std::int64_t weight) {
        std::vector<std::int64_t> row(m, 0);
        for (auto e : edges) row[e] += weight;
        return row;
    };
    IntMatrix square(0, m), balancing(0, m);
    for (const auto& c : basis_.cycles) {
        square.push_row(row_of(c.trail.edges, 1));
        balancing.push_row(row_of(c.trail.edges, 1));
    }
    for (auto e : basis_.forest_edges) square.push_row(row_of({e}, 1));
    for (const auto& s : basis_.shorts) {
        square.push_row(row_of(s.trail.edges, 1));
        balancing.push_row(row_of(s.trail.edges, 2));
    }
    basis_system_ = LinearSystem(std::move(square));
    balancing_system_ = LinearSystem(std::move(balancing));
}

void BalanceFrame::check(const FiniteAbelianGroup& group, const EdgeLabeling& f) const {
    check_values(group, f.values, graph_.edge_count(), "edge labeling");
}

void BalanceFrame::check(const FiniteAbelianGroup& group, const VertexLabeling& gv) const {
    check_values(group, gv.values, graph_.vertex_count(), "vertex labeling");
}

GroupElement BalanceFrame::vertex_sum(const FiniteAbelianGroup& group, const VertexLabeling& gv,
                                      const std::vector<VertexIndex>& vertices) const {
    GroupElement s = group.zero();
    for (auto v : vertices) s = group.add(s, gv.values[v]);
    return s;
}

GroupStructure BalanceFrame::group_structure(LabelingKind which) const {
    const std::size_t n = graph_.vertex_count();
    switch (which) {
        case LabelingKind::H: return {con3() - con(), n - con3(), 0};
        case LabelingKind::B: return {con3(), 0, n - con3()};
        case LabelingKind::W: return {n + con3() - con(), 0, 0};
    }
    throw std::invalid_argument("unknown labeling kind");
}

BigInt BalanceFrame::count_balanced(const FiniteAbelianGroup& group, LabelingKind which) const {
    return structure_cardinality(group_structure(which), group);
}

bool BalanceFrame::is_balanced_edges(const FiniteAbelianGroup& group, const EdgeLabeling& f) const {
    check(group, f);
    for (const auto& c : basis_.cycles)
        if (!group.is_zero(edge_sum(group, f, c.trail.edges))) return false;
    for (const auto& s : basis_.shorts)
        if (!in_two_torsion(group, edge_sum(group, f, s.trail.edges))) return false;
    return true;
}

bool BalanceFrame::is_balanced_full(const FiniteAbelianGroup& group, const FullLabeling& h) const {
    check(group, h.vertices);
    check(group, h.edges);
    for (const auto& c : basis_.cycles)
        if (!group.is_zero(trail_value(group, h, c.trail))) return false;
    // Twice the value of a short from u to v equals h(u) - h(v).
    for (const auto& s : basis_.shorts) {
        GroupElement twice = group.scale(2, trail_value(group, h, s.trail));
        if (twice != group.sub(h.vertices.values[s.from], h.vertices.values[s.to])) return false;
    }
    return true;
}

bool BalanceFrame::is_balanceable(const FiniteAbelianGroup& group, const VertexLabeling& gv) const {
    check(group, gv);
    return std::all_of(non_reps_.begin(), non_reps_.end(), [&](VertexIndex v) {
        return in_double_image(group, group.sub(gv.values[v], gv.values[rep_of(v)]));
    });
}

std::optional<EdgeLabeling> BalanceFrame::balance(const FiniteAbelianGroup& group, const VertexLabeling& gv) const {
    check(group, gv);
    std::vector<GroupElement> rhs;
    for (const auto& c : basis_.cycles) rhs.push_back(group.neg(vertex_sum(group, gv, c.trail.vertices)));
    for (const auto& s : basis_.shorts) {
        GroupElement r = group.sub(gv.values[s.from], gv.values[s.to]);
        rhs.push_back(group.sub(r, group.scale(2, vertex_sum(group, gv, s.trail.vertices))));
    }
    auto solution = balancing_system_.solve(rhs, group);
    if (!solution) return std::nullopt;
    EdgeLabeling f{std::move(*solution)};
    if (!is_balanced_full(group, FullLabeling{gv, f}))
        throw std::logic_error("balance: solver output failed the balancedness check");
    return f;
}

EdgeCoordinates BalanceFrame::phi(const FiniteAbelianGroup& group, const EdgeLabeling& f) const {
    if (!is_balanced_edges(group, f)) throw std::invalid_argument("phi: edge labeling is not balanced");
    EdgeCoordinates coords;
    for (auto e : basis_.forest_edges) coords.forest.push_back(f.values[e]);
    for (const auto& s : basis_.shorts) coords.shorts.push_back(edge_sum(group, f, s.trail.edges));
    return coords;
}

EdgeLabeling BalanceFrame::phi_inv(const FiniteAbelianGroup& group, const EdgeCoordinates& coords) const {
    check_values(group, coords.forest, basis_.forest_edges.size(), "phi coordinates (forest)");
    check_values(group, coords.shorts, basis_.shorts.size(), "phi coordinates (shorts)");
    for (const auto& a : coords.shorts)
        if (!in_two_torsion(group, a)) throw std::invalid_argument("phi_inv: short coordinate is not in A2");
    std::vector<GroupElement> rhs(basis_.cycles.size(), group.zero());
    rhs.insert(rhs.end(), coords.forest.begin(), coords.forest.end());
    rhs.insert(rhs.end(), coords.shorts.begin(), coords.shorts.end());
    auto solution = basis_system_.solve(rhs, group);
    if (!solution) throw std::logic_error("phi_inv: basis system is unsolvable");
    EdgeLabeling f{std::move(*solution)};
    if (!is_balanced_edges(group, f)) throw std::logic_error("phi_inv: result is not balanced");
    return f;
}

VertexCoordinates BalanceFrame::psi(const FiniteAbelianGroup& group, const VertexLabeling& gv) const {
    if (!is_balanceable(group, gv)) throw std::invalid_argument("psi: vertex labeling is not balanceable");
    VertexCoordinates coords;
    for (auto w : basis_.reps) coords.reps.push_back(gv.values[w]);
    for (auto v : non_reps_) coords.diffs.push_back(group.sub(gv.values[v], gv.values[rep_of(v)]));
    return coords;
}

VertexLabeling BalanceFrame::psi_inv(const FiniteAbelianGroup& group, const VertexCoordinates& coords) const {
    check_values(group, coords.reps, basis_.reps.size(), "psi coordinates (reps)");
    check_values(group, coords.diffs, non_reps_.size(), "psi coordinates (differences)");
    VertexLabeling gv{std::vector<GroupElement>(graph_.vertex_count(), group.zero())};
    for (std::size_t i = 0; i < basis_.reps.size(); ++i) gv.values[basis_.reps[i]] = coords.reps[i];
    for (std::size_t i = 0; i < non_reps_.size(); ++i) {
        if (!in_double_image(group, coords.diffs[i])) throw std::invalid_argument("psi_inv: difference is not in 2A");
        gv.values[non_reps_[i]] = group.add(coords.diffs[i], gv.values[rep_of(non_reps_[i])]);
    }
    return gv;
}

FullCoordinates BalanceFrame::xi(const FiniteAbelianGroup& group, const FullLabeling& h) const {
    if (!is_balanced_full(group, h)) throw std::invalid_argument("xi: labeling is not balanced");
    FullCoordinates coords;
    for (auto w : basis_.reps) coords.reps.push_back(h.vertices.values[w]);
    for (auto e : basis_.forest_edges) coords.forest.push_back(h.edges.values[e]);
    for (const auto& s : basis_.shorts) coords.shorts.push_back(trail_value(group, h, s.trail));
    return coords;
}

FullLabeling BalanceFrame::xi_inv(const FiniteAbelianGroup& group, const FullCoordinates& coords) const {
    check_values(group, coords.reps, basis_.reps.size(), "xi coordinates (reps)");
    check_values(group, coords.forest, basis_.forest_edges.size(), "xi coordinates (forest)");
    check_values(group, coords.shorts, basis_.shorts.size(), "xi coordinates (shorts)");

    // Vertex values spread from the representatives along the shorts:
    // h(to) = h(from) - 2 h(s).
    const std::size_t n = graph_.vertex_count();
    FullLabeling h{VertexLabeling{std::vector<GroupElement>(n, group.zero())}, EdgeLabeling{}};
    std::vector<bool> known(n, false);
    for (std::size_t i = 0; i < basis_.reps.size(); ++i) {
        h.vertices.values[basis_.reps[i]] = coords.reps[i];
        known[basis_.reps[i]] = true;
    }
    for (bool progress = true; progress;) {
        progress = false;
        for (std::size_t j = 0; j < basis_.shorts.size(); ++j) {
            const auto& s = basis_.shorts[j];
            const GroupElement twice = group.scale(2, coords.shorts[j]);
            if (known[s.from] && !known[s.to]) {
                h.vertices.values[s.to] = group.sub(h.vertices.values[s.from], twice);
                known[s.to] = progress = true;
            } else if (known[s.to] && !known[s.from]) {
                h.vertices.values[s.from] = group.add(h.vertices.values[s.to], twice);
                known[s.from] = progress = true;
            }
        }
    }
    if (std::find(known.begin(), known.end(), false) != known.end())
        throw std::logic_error("xi_inv: short generators do not reach every vertex");

    std::vector<GroupElement> rhs;
    for (const auto& c : basis_.cycles) rhs.push_back(group.neg(vertex_sum(group, h.vertices, c.trail.vertices)));
    rhs.insert(rhs.end(), coords.forest.begin(), coords.forest.end());
    for (std::size_t j = 0; j < basis_.shorts.size(); ++j)
        rhs.push_back(group.sub(coords.shorts[j], vertex_sum(group, h.vertices, basis_.shorts[j].trail.vertices)));
    auto solution = basis_system_.solve(rhs, group);
    if (!solution) throw std::logic_error("xi_inv: basis system is unsolvable");
    h.edges.values = std::move(*solution);
    if (!is_balanced_full(group, h)) throw std::logic_error("xi_inv: result is not balanced");
    return h;
}

EdgeLabeling point_balancer(const MultiGraph& g, const FiniteAbelianGroup& group, VertexIndex v,
                            const GroupElement& a) {
    EdgeLabeling f{std::vector<GroupElement>(g.edge_count(), group.zero())};
    for (const auto& inc : g.incident(v))
        f.values[inc.edge] = group.neg(group.scale(g.edge(inc.edge).is_loop() ? 2 : 1, a));
    return f;
}

GroupStructure group_structure(const MultiGraph& g, LabelingKind which) {
    return BalanceFrame(g).group_structure(which);
}

BigInt count_balanced(const MultiGraph& g, const FiniteAbelianGroup& group, LabelingKind which) {
    return BalanceFrame(g).count_balanced(group, which);
}

bool is_balanced_edges(const MultiGraph& g, const FiniteAbelianGroup& group, const EdgeLabeling& f) {
    return BalanceFrame(g).is_balanced_edges(group, f);
}

bool is_balanced_full(const MultiGraph& g, const FiniteAbelianGroup& group, const FullLabeling& h) {
    return BalanceFrame(g).is_balanced_full(group, h);
}

bool is_balanceable(const MultiGraph& g, const FiniteAbelianGroup& group, const VertexLabeling& gv) {
    return BalanceFrame(g).is_balanceable(group, gv);
}

std::optional<EdgeLabeling> balance(const MultiGraph& g, const FiniteAbelianGroup& group, const VertexLabeling& gv) {
    return BalanceFrame(g).balance(group, gv);
}

}  // namespace balgraph
