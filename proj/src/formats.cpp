#include "balgraph/formats.hpp"

#include <algorithm>
#include <sstream>

#include "text_util.hpp"

namespace balgraph {

namespace {

GroupElement parse_residues(const FiniteAbelianGroup& group, const std::string& literal, std::size_t line) {
    try {
        return parse_element(group, literal);
    } catch (const std::invalid_argument& ex) {
        throw ParseError(line, ex.what());
    }
}

template <typename Slot>
void assign_once(std::optional<Slot>& slot, Slot value, std::size_t line, const std::string& id) {
    if (slot) throw ParseError(line, "'" + id + "' is assigned twice");
    slot = std::move(value);
}

}  // namespace

bool LabelingRecords::any_vertex() const {
    return std::any_of(vertices.begin(), vertices.end(), [](const auto& v) { return v.has_value(); });
}

bool LabelingRecords::any_edge() const {
    return std::any_of(edges.begin(), edges.end(), [](const auto& e) { return e.has_value(); });
}

LabelingRecords parse_labeling(const MultiGraph& g, const FiniteAbelianGroup& group, std::string_view text) {
    LabelingRecords records{std::vector<std::optional<GroupElement>>(g.vertex_count()),
                            std::vector<std::optional<GroupElement>>(g.edge_count())};
    std::size_t line_no = 0;
    for (const auto& line : detail::split_lines(text)) {
        ++line_no;
        auto tokens = detail::tokenize(line);
        if (tokens.empty()) continue;
        if (tokens.size() != 3 || (tokens[0] != "vertex" && tokens[0] != "edge"))
            throw ParseError(line_no, "expected 'vertex <id> <residues>' or 'edge <id> <residues>'");
        GroupElement value = parse_residues(group, tokens[2], line_no);
        if (tokens[0] == "vertex") {
            VertexIndex v = g.find_vertex(tokens[1]);
            if (v == kNoVertex) throw ParseError(line_no, "unknown vertex '" + tokens[1] + "'");
            assign_once(records.vertices[v], std::move(value), line_no, tokens[1]);
        } else {
            EdgeIndex e = g.find_edge(tokens[1]);
            if (e == MultiGraph::kNoEdge) throw ParseError(line_no, "unknown edge '" + tokens[1] + "'");
            assign_once(records.edges[e], std::move(value), line_no, tokens[1]);
        }
    }
    return records;
}

EdgeLabeling require_edge_labeling(const MultiGraph& g, const LabelingRecords& records) {
    EdgeLabeling f;
    for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
        if (!records.edges[e]) throw std::invalid_argument("edge '" + g.edge(e).id + "' has no value");
        f.values.push_back(*records.edges[e]);
    }
    return f;
}

VertexLabeling require_vertex_labeling(const MultiGraph& g, const LabelingRecords& records) {
    VertexLabeling gv;
    for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
        if (!records.vertices[v]) throw std::invalid_argument("vertex '" + g.vertex_id(v) + "' has no value");
        gv.values.push_back(*records.vertices[v]);
    }
    return gv;
}

FullLabeling require_full_labeling(const MultiGraph& g, const LabelingRecords& records) {
    return FullLabeling{require_vertex_labeling(g, records), require_edge_labeling(g, records)};
}

std::string format_labeling(const MultiGraph& g, const EdgeLabeling& f) {
    std::ostringstream out;
    for (EdgeIndex e = 0; e < g.edge_count(); ++e) out << "edge " << g.edge(e).id << ' ' << format_element(f.values.at(e)) << '\n';
    return out.str();
}

std::string format_labeling(const MultiGraph& g, const VertexLabeling& gv) {
    std::ostringstream out;
    for (VertexIndex v = 0; v < g.vertex_count(); ++v)
        out << "vertex " << g.vertex_id(v) << ' ' << format_element(gv.values.at(v)) << '\n';
    return out.str();
}

std::string format_labeling(const MultiGraph& g, const FullLabeling& h) {
    return format_labeling(g, h.vertices) + format_labeling(g, h.edges);
}

FullCoordinates parse_coordinates(const BalanceFrame& frame, const FiniteAbelianGroup& group, std::string_view text) {
    const auto& g = frame.graph();
    const auto& basis = frame.basis();
    std::vector<std::optional<GroupElement>> reps(basis.reps.size()), forest(basis.forest_edges.size()),
        shorts(basis.shorts.size());
    std::size_t line_no = 0;
    for (const auto& line : detail::split_lines(text)) {
        ++line_no;
        auto tokens = detail::tokenize(line);
        if (tokens.empty()) continue;
        if (tokens.size() != 3) throw ParseError(line_no, "expected '<rep|forest|short> <key> <residues>'");
        GroupElement value = parse_residues(group, tokens[2], line_no);
        if (tokens[0] == "rep") {
            auto it = std::find_if(basis.reps.begin(), basis.reps.end(),
                                   [&](VertexIndex w) { return g.vertex_id(w) == tokens[1]; });
            if (it == basis.reps.end()) throw ParseError(line_no, "'" + tokens[1] + "' is not a class representative");
            assign_once(reps[static_cast<std::size_t>(it - basis.reps.begin())], std::move(value), line_no, tokens[1]);
        } else if (tokens[0] == "forest") {
            auto it = std::find_if(basis.forest_edges.begin(), basis.forest_edges.end(),
                                   [&](EdgeIndex e) { return g.edge(e).id == tokens[1]; });
            if (it == basis.forest_edges.end()) throw ParseError(line_no, "'" + tokens[1] + "' is not a forest edge");
            assign_once(forest[static_cast<std::size_t>(it - basis.forest_edges.begin())], std::move(value), line_no,
                        tokens[1]);
        } else if (tokens[0] == "short") {
            std::size_t index = 0;
            try {
                std::size_t used = 0;
                index = std::stoul(tokens[1], &used);
                if (used != tokens[1].size()) throw std::invalid_argument("trailing characters");
            } catch (const std::exception&) {
                throw ParseError(line_no, "short index must be a positive integer");
            }
            if (index < 1 || index > shorts.size())
                throw ParseError(line_no, "short index " + tokens[1] + " outside 1.." + std::to_string(shorts.size()));
            assign_once(shorts[index - 1], std::move(value), line_no, "short " + tokens[1]);
        } else {
            throw ParseError(line_no, "unknown record '" + tokens[0] + "'");
        }
    }
    FullCoordinates coords;
    auto collect = [](const auto& slots, std::vector<GroupElement>& out, const std::string& what) {
        for (std::size_t i = 0; i < slots.size(); ++i) {
            if (!slots[i]) throw std::invalid_argument("coordinate file is missing " + what + " #" + std::to_string(i + 1));
            out.push_back(*slots[i]);
        }
    };
    collect(reps, coords.reps, "rep");
    collect(forest, coords.forest, "forest");
    collect(shorts, coords.shorts, "short");
    return coords;
}

std::string format_coordinates(const BalanceFrame& frame, const FullCoordinates& coords) {
    const auto& g = frame.graph();
    const auto& basis = frame.basis();
    std::ostringstream out;
    for (std::size_t i = 0; i < basis.reps.size(); ++i)
        out << "rep " << g.vertex_id(basis.reps[i]) << ' ' << format_element(coords.reps.at(i)) << '\n';
    for (std::size_t i = 0; i < basis.forest_edges.size(); ++i)
        out << "forest " << g.edge(basis.forest_edges[i]).id << ' ' << format_element(coords.forest.at(i)) << '\n';
    for (std::size_t i = 0; i < basis.shorts.size(); ++i)
        out << "short " << i + 1 << ' ' << format_element(coords.shorts.at(i)) << '\n';
    return out.str();
}

}  // namespace balgraph
