#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hspec/common.hpp"

namespace hspec {

struct Hyperedge {
    std::string id;
    std::vector<Index> members;  // sorted vertex indices, non-empty
};

// A finite hypergraph with no repeated hyperedges. Vertices are addressed by
// index 0..n-1; labels are kept for I/O. Immutable once built.
class Hypergraph {
public:
    enum class VertexOrder {
        sorted,    // numeric-aware label sort (the canonical order)
        as_given,  // keep the caller's order (used for derived hypergraphs)
    };

    struct EdgeSpec {
        std::string id;
        std::vector<std::string> members;
    };

    Hypergraph() = default;

    static Hypergraph build(std::vector<std::string> labels, const std::vector<EdgeSpec>& edges,
                            VertexOrder order = VertexOrder::sorted);

    Index order() const { return labels_.size(); }
    Index size() const { return edges_.size(); }

    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(Index v) const { return labels_.at(v); }
    Index index_of(std::string_view label) const;
    std::optional<Index> find_vertex(std::string_view label) const;

    const std::vector<Hyperedge>& edges() const { return edges_; }
    const Hyperedge& edge(Index e) const { return edges_.at(e); }
    Index edge_index(std::string_view id) const;

    // Edge indices containing v, ascending.
    const std::vector<Index>& star(Index v) const { return stars_.at(v); }
    std::vector<std::string> star(std::string_view label) const;

    // Edge whose member set equals `sorted_members`, if any.
    std::optional<Index> find_edge(const std::vector<Index>& sorted_members) const;

    // Number of edges containing both u and v.
    Index common_edges(Index u, Index v) const;

private:
    std::vector<std::string> labels_;
    std::map<std::string, Index, std::less<>> label_index_;
    std::vector<Hyperedge> edges_;
    std::map<std::string, Index, std::less<>> edge_index_;
    std::map<std::vector<Index>, Index> member_set_index_;
    std::vector<std::vector<Index>> stars_;
};

// Sorts labels numerically when every label is an integer, lexicographically
// otherwise.
void sort_labels(std::vector<std::string>& labels);

Hypergraph parse_hypergraph(std::string_view text);
std::string serialize_hypergraph(const Hypergraph& h);

struct Unit {
    std::vector<Index> generating_set;  // edge indices, ascending
    std::vector<Index> members;         // vertex indices, ascending
};

// Classes of vertices with identical stars, ordered by smallest member.
struct UnitPartition {
    std::vector<Unit> units;
    std::vector<Index> vertex_to_unit;

    Index count() const { return units.size(); }
};

UnitPartition compute_units(const Hypergraph& h);

// Members' labels in vertex order joined by ",".
std::string unit_key(const Hypergraph& h, const Unit& unit);

struct ContractionResult {
    Hypergraph contracted;       // vertex i is unit i
    std::vector<Index> edge_map; // original edge index -> contracted edge index
};

ContractionResult unit_contraction(const Hypergraph& h, const UnitPartition& units);
ContractionResult unit_contraction(const Hypergraph& h);

}  // namespace hspec
