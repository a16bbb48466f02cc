#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "balgraph/labelings.hpp"

namespace balgraph {

/// Contents of a labeling file (`vertex <id> <residues>`, `edge <id> <residues>`).
/// Entries absent from the file stay empty.
struct LabelingRecords {
    std::vector<std::optional<GroupElement>> vertices;
    std::vector<std::optional<GroupElement>> edges;

    bool any_vertex() const;
    bool any_edge() const;
};

/// Throws ParseError (with the line number) on malformed records, unknown ids,
/// repeated ids, or residues outside the group.
LabelingRecords parse_labeling(const MultiGraph& g, const FiniteAbelianGroup& group, std::string_view text);

/// Throw std::invalid_argument naming the first id without a value.
EdgeLabeling require_edge_labeling(const MultiGraph& g, const LabelingRecords& records);
VertexLabeling require_vertex_labeling(const MultiGraph& g, const LabelingRecords& records);
FullLabeling require_full_labeling(const MultiGraph& g, const LabelingRecords& records);

std::string format_labeling(const MultiGraph& g, const EdgeLabeling& f);
std::string format_labeling(const MultiGraph& g, const VertexLabeling& gv);
std::string format_labeling(const MultiGraph& g, const FullLabeling& h);

/// Coordinate file: `rep <vertex> <residues>`, `forest <edge> <residues>`,
/// `short <index> <residues>` (index is 1-based), every slot exactly once.
FullCoordinates parse_coordinates(const BalanceFrame& frame, const FiniteAbelianGroup& group, std::string_view text);
std::string format_coordinates(const BalanceFrame& frame, const FullCoordinates& coords);

}  // namespace balgraph
