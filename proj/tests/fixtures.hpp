#pragma once

#include <string>

#include "hspec/documents.hpp"
#include "hspec/hypergraph.hpp"

namespace fixtures {

inline std::string data_path(const std::string& name) { return std::string(HSPEC_DATA_DIR) + "/" + name; }

inline hspec::Hypergraph figure1() { return hspec::parse_hypergraph(hspec::read_file(data_path("figure1.json"))); }

inline hspec::Hypergraph figure2() { return hspec::parse_hypergraph(hspec::read_file(data_path("figure2.json"))); }

// 2->5->8->2, 3->6->9->3, 4->7->10->4, 1 fixed.
inline hspec::Permutation figure1_rotation(const hspec::Hypergraph& h) {
    return hspec::parse_permutation(h, hspec::read_file(data_path("figure1_rotation.json")));
}

inline std::vector<hspec::Index> figure2_unit_map(const hspec::Hypergraph& h, const hspec::UnitPartition& units) {
    return hspec::parse_unit_map(h, units, hspec::read_file(data_path("figure2_unit_map.json")));
}

inline hspec::Index v(const hspec::Hypergraph& h, const std::string& label) { return h.index_of(label); }

}  // namespace fixtures
