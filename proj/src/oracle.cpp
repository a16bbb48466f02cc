#include "balgraph/oracle.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

namespace balgraph {

namespace {

std::optional<std::uint64_t> checked_pow(std::uint64_t base, std::size_t exp) {
    std::uint64_t r = 1;
    for (std::size_t i = 0; i < exp; ++i)
        if (__builtin_mul_overflow(r, base, &r)) return std::nullopt;
    return r;
}

// Visits every assignment of group elements to `slots` positions in lexicographic order.
template <typename Visit>
void for_each_assignment(const std::vector<GroupElement>& elements, std::size_t slots, Visit&& visit) {
    std::vector<std::size_t> digit(slots, 0);
    std::vector<GroupElement> values(slots, elements.front());
    while (true) {
        visit(values);
        std::size_t i = slots;
        while (i > 0) {
            --i;
            if (++digit[i] < elements.size()) {
                values[i] = elements[digit[i]];
                break;
            }
            digit[i] = 0;
            values[i] = elements.front();
            if (i == 0) return;
        }
        if (slots == 0) return;
    }
}

}  // namespace

std::vector<Ttrail> enumerate_simple_cycles(const MultiGraph& g, const OracleBounds& bounds) {
    if (g.edge_count() > bounds.max_edges_for_cycles)
        throw BoundExceeded("cycle enumeration limited to " + std::to_string(bounds.max_edges_for_cycles) + " edges");

    std::set<std::vector<EdgeIndex>> seen;
    std::vector<std::pair<std::vector<EdgeIndex>, Ttrail>> found;
    auto record = [&](Ttrail t) {
        std::vector<EdgeIndex> key = t.edges;
        std::sort(key.begin(), key.end());
        if (seen.insert(key).second) found.emplace_back(std::move(key), std::move(t));
    };

    for (EdgeIndex anchor = 0; anchor < g.edge_count(); ++anchor) {
        const auto& rec = g.edge(anchor);
        if (rec.is_loop()) {
            record(Ttrail{{rec.u}, {anchor}, rec.u});
            continue;
        }
        // Paths from w back to u over edges above the anchor, so the anchor is
        // the smallest edge of every cycle it closes.
        std::vector<bool> on_path(g.vertex_count(), false);
        on_path[rec.u] = on_path[rec.w] = true;
        Ttrail path{{rec.u}, {anchor}, rec.u};
        std::function<void(VertexIndex)> extend = [&](VertexIndex x) {
            for (const auto& inc : g.incident(x)) {
                if (inc.edge <= anchor || g.edge(inc.edge).is_loop()) continue;
                if (inc.neighbor == rec.u) {
                    Ttrail cycle = path;
                    cycle.vertices.push_back(x);
                    cycle.edges.push_back(inc.edge);
                    record(std::move(cycle));
                } else if (!on_path[inc.neighbor]) {
                    on_path[inc.neighbor] = true;
                    path.vertices.push_back(x);
                    path.edges.push_back(inc.edge);
                    extend(inc.neighbor);
                    path.vertices.pop_back();
                    path.edges.pop_back();
                    on_path[inc.neighbor] = false;
                }
            }
        };
        extend(rec.w);
    }
    std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<Ttrail> cycles;
    for (auto& [key, t] : found) cycles.push_back(std::move(t));
    return cycles;
}

CycleOracle::CycleOracle(const MultiGraph& g, const OracleBounds& bounds)
    : vertex_count_(g.vertex_count()), edge_count_(g.edge_count()), cycles_(enumerate_simple_cycles(g, bounds)) {}

bool CycleOracle::is_balanced(const FiniteAbelianGroup& group, const EdgeLabeling& f) const {
    if (f.values.size() != edge_count_) throw std::invalid_argument("edge labeling does not match graph");
    for (const auto& c : cycles_) {
        GroupElement s = group.zero();
        for (auto e : c.edges) s = group.add(s, f.values[e]);
        if (!group.is_zero(s)) return false;
    }
    return true;
}

bool CycleOracle::is_balanced(const FiniteAbelianGroup& group, const FullLabeling& h) const {
    if (h.edges.values.size() != edge_count_ || h.vertices.values.size() != vertex_count_)
        throw std::invalid_argument("labeling does not match graph");
    for (const auto& c : cycles_) {
        GroupElement s = group.zero();
        for (std::size_t i = 0; i < c.edges.size(); ++i) {
            s = group.add(s, h.vertices.values[c.vertices[i]]);
            s = group.add(s, h.edges.values[c.edges[i]]);
        }
        if (!group.is_zero(s)) return false;
    }
    return true;
}

bool oracle_is_balanced(const MultiGraph& g, const FiniteAbelianGroup& group, const EdgeLabeling& f,
                        const OracleBounds& bounds) {
    return CycleOracle(g, bounds).is_balanced(group, f);
}

bool oracle_is_balanced(const MultiGraph& g, const FiniteAbelianGroup& group, const FullLabeling& h,
                        const OracleBounds& bounds) {
    return CycleOracle(g, bounds).is_balanced(group, h);
}

std::optional<std::uint64_t> oracle_search_size(const MultiGraph& g, const FiniteAbelianGroup& group,
                                                LabelingKind which) {
    auto order = group.small_cardinality();
    if (!order) return std::nullopt;
    const std::size_t slots = g.edge_count() + (which == LabelingKind::H ? 0 : g.vertex_count());
    return checked_pow(*order, slots);
}

std::uint64_t oracle_count_balanced(const MultiGraph& g, const FiniteAbelianGroup& group, LabelingKind which,
                                    const OracleBounds& bounds) {
    auto size = oracle_search_size(g, group, which);
    if (!size || *size > bounds.max_labelings)
        throw BoundExceeded("exhaustive count exceeds " + std::to_string(bounds.max_labelings) + " labelings");
    const CycleOracle oracle(g, bounds);
    const auto elements = enumerate_elements(group, bounds.max_labelings);
    const std::size_t n = g.vertex_count(), m = g.edge_count();

    std::uint64_t count = 0;
    if (which == LabelingKind::H) {
        EdgeLabeling f;
        for_each_assignment(elements, m, [&](const std::vector<GroupElement>& values) {
            f.values = values;
            if (oracle.is_balanced(group, f)) ++count;
        });
        return count;
    }

    std::vector<bool> vertex_parts;
    if (which == LabelingKind::B) vertex_parts.assign(*checked_pow(elements.size(), n), false);
    FullLabeling h;
    for_each_assignment(elements, n + m, [&](const std::vector<GroupElement>& values) {
        h.vertices.values.assign(values.begin(), values.begin() + static_cast<std::ptrdiff_t>(n));
        h.edges.values.assign(values.begin() + static_cast<std::ptrdiff_t>(n), values.end());
        if (!oracle.is_balanced(group, h)) return;
        if (which == LabelingKind::W) {
            ++count;
            return;
        }
        std::uint64_t key = 0;
        for (const auto& a : h.vertices.values) key = key * elements.size() + group.index_of(a);
        if (!vertex_parts[key]) {
            vertex_parts[key] = true;
            ++count;
        }
    });
    return count;
}

Partition oracle_k_classes(const MultiGraph& g, std::size_t k, const OracleBounds& bounds) {
    if (k == 0) throw std::invalid_argument("oracle_k_classes: k must be positive");
    const std::size_t n = g.vertex_count(), m = g.edge_count();
    const std::size_t removed = k - 1;

    // Number of deletion sets, C(m, k-1), times m.
    std::uint64_t work = m + 1;
    for (std::size_t i = 0; i < removed && i < m; ++i) {
        work = work * (m - i) / (i + 1);
        if (work > bounds.max_deletion_checks) break;
    }
    if (work > bounds.max_deletion_checks)
        throw BoundExceeded("deletion oracle exceeds " + std::to_string(bounds.max_deletion_checks) + " checks");

    std::vector<std::vector<bool>> separated(n, std::vector<bool>(n, false));
    std::vector<bool> deleted(m, false);
    std::vector<std::size_t> label(n);
    auto mark_separations = [&]() {
        std::fill(label.begin(), label.end(), static_cast<std::size_t>(-1));
        std::size_t next = 0;
        for (VertexIndex root = 0; root < n; ++root) {
            if (label[root] != static_cast<std::size_t>(-1)) continue;
            std::vector<VertexIndex> stack{root};
            label[root] = next;
            while (!stack.empty()) {
                VertexIndex x = stack.back();
                stack.pop_back();
                for (const auto& inc : g.incident(x)) {
                    if (deleted[inc.edge] || label[inc.neighbor] != static_cast<std::size_t>(-1)) continue;
                    label[inc.neighbor] = next;
                    stack.push_back(inc.neighbor);
                }
            }
            ++next;
        }
        for (VertexIndex a = 0; a < n; ++a)
            for (VertexIndex b = a + 1; b < n; ++b)
                if (label[a] != label[b]) separated[a][b] = separated[b][a] = true;
    };

    if (removed > m) {
        // Deleting every edge is one of the allowed deletions.
        std::fill(deleted.begin(), deleted.end(), true);
        mark_separations();
    } else {
        std::vector<std::size_t> pick(removed);
        std::iota(pick.begin(), pick.end(), std::size_t{0});
        while (true) {
            std::fill(deleted.begin(), deleted.end(), false);
            for (auto e : pick) deleted[e] = true;
            mark_separations();
            std::size_t i = removed;
            while (i > 0 && pick[i - 1] == m - removed + (i - 1)) --i;
            if (i == 0) break;
            ++pick[i - 1];
            for (std::size_t j = i; j < removed; ++j) pick[j] = pick[j - 1] + 1;
        }
    }

    std::vector<std::vector<VertexIndex>> blocks;
    std::vector<bool> placed(n, false);
    for (VertexIndex a = 0; a < n; ++a) {
        if (placed[a]) continue;
        std::vector<VertexIndex> block{a};
        placed[a] = true;
        for (VertexIndex b = a + 1; b < n; ++b)
            if (!placed[b] && !separated[a][b]) {
                block.push_back(b);
                placed[b] = true;
            }
        blocks.push_back(std::move(block));
    }
    return Partition(n, std::move(blocks));
}

}  // namespace balgraph
