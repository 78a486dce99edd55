#include "hspec/hypergraph.hpp"

#include <algorithm>
#include <charconv>
#include <set>

#include <json.hpp>

namespace hspec {

namespace {

std::optional<long long> as_integer(const std::string& s) {
    long long value = 0;
    const char* first = s.data();
    const char* last = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last || s.empty()) {
        return std::nullopt;
    }
    return value;
}

}  // namespace

void sort_labels(std::vector<std::string>& labels) {
    bool numeric = std::all_of(labels.begin(), labels.end(),
                               [](const std::string& s) { return as_integer(s).has_value(); });
    if (numeric) {
        std::sort(labels.begin(), labels.end(), [](const std::string& a, const std::string& b) {
            return *as_integer(a) < *as_integer(b);
        });
    } else {
        std::sort(labels.begin(), labels.end());
    }
}

Hypergraph Hypergraph::build(std::vector<std::string> labels, const std::vector<EdgeSpec>& edges,
                             VertexOrder order) {
    Hypergraph h;
    if (order == VertexOrder::sorted) {
        sort_labels(labels);
    }
    for (Index i = 0; i < labels.size(); ++i) {
        if (!h.label_index_.emplace(labels[i], i).second) {
            throw InvalidArgument("duplicate vertex label '" + labels[i] + "'");
        }
    }
    h.labels_ = std::move(labels);
    h.stars_.assign(h.labels_.size(), {});

    for (const auto& spec : edges) {
        if (spec.members.empty()) {
            throw InvalidArgument("hyperedge '" + spec.id + "' is empty");
        }
        Hyperedge e;
        e.id = spec.id;
        for (const auto& m : spec.members) {
            auto v = h.find_vertex(m);
            if (!v) {
                throw InvalidArgument("hyperedge '" + spec.id + "' references unknown vertex '" + m + "'");
            }
            e.members.push_back(*v);
        }
        std::sort(e.members.begin(), e.members.end());
        if (std::adjacent_find(e.members.begin(), e.members.end()) != e.members.end()) {
            throw InvalidArgument("hyperedge '" + spec.id + "' lists a vertex twice");
        }
        const Index idx = h.edges_.size();
        if (!h.edge_index_.emplace(e.id, idx).second) {
            throw InvalidArgument("duplicate hyperedge id '" + e.id + "'");
        }
        auto [it, inserted] = h.member_set_index_.emplace(e.members, idx);
        if (!inserted) {
            throw InvalidArgument("hyperedges '" + h.edges_[it->second].id + "' and '" + e.id +
                                  "' have the same member set");
        }
        for (Index v : e.members) {
            h.stars_[v].push_back(idx);
        }
        h.edges_.push_back(std::move(e));
    }
    return h;
}

std::optional<Index> Hypergraph::find_vertex(std::string_view label) const {
    auto it = label_index_.find(label);
    if (it == label_index_.end()) {
        return std::nullopt;
    }
    return it->second;
}

Index Hypergraph::index_of(std::string_view label) const {
    auto v = find_vertex(label);
    if (!v) {
        throw InvalidArgument("unknown vertex '" + std::string(label) + "'");
    }
    return *v;
}

Index Hypergraph::edge_index(std::string_view id) const {
    auto it = edge_index_.find(id);
    if (it == edge_index_.end()) {
        throw InvalidArgument("unknown hyperedge '" + std::string(id) + "'");
    }
    return it->second;
}

std::vector<std::string> Hypergraph::star(std::string_view label) const {
    std::vector<std::string> ids;
    for (Index e : star(index_of(label))) {
        ids.push_back(edges_[e].id);
    }
    return ids;
}

std::optional<Index> Hypergraph::find_edge(const std::vector<Index>& sorted_members) const {
    auto it = member_set_index_.find(sorted_members);
    if (it == member_set_index_.end()) {
        return std::nullopt;
    }
    return it->second;
}

Index Hypergraph::common_edges(Index u, Index v) const {
    const auto& a = stars_.at(u);
    const auto& b = stars_.at(v);
    Index count = 0;
    auto i = a.begin();
    auto j = b.begin();
    while (i != a.end() && j != b.end()) {
        if (*i < *j) {
            ++i;
        } else if (*j < *i) {
            ++j;
        } else {
            ++count;
            ++i;
            ++j;
        }
    }
    return count;
}

Hypergraph parse_hypergraph(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("malformed hypergraph document: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("vertices") || !doc.contains("edges")) {
        throw ParseError("hypergraph document must be an object with \"vertices\" and \"edges\"");
    }
    try {
        auto labels = doc.at("vertices").get<std::vector<std::string>>();
        std::vector<Hypergraph::EdgeSpec> edges;
        for (const auto& e : doc.at("edges")) {
            if (!e.is_object() || !e.contains("id") || !e.contains("members")) {
                throw ParseError("each edge must be an object with \"id\" and \"members\"");
            }
            edges.push_back({e.at("id").get<std::string>(),
                             e.at("members").get<std::vector<std::string>>()});
        }
        return Hypergraph::build(std::move(labels), edges);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed hypergraph document: ") + e.what());
    }
}

std::string serialize_hypergraph(const Hypergraph& h) {
    nlohmann::json doc;
    doc["vertices"] = h.labels();
    doc["edges"] = nlohmann::json::array();
    for (const auto& e : h.edges()) {
        std::vector<std::string> members;
        for (Index v : e.members) {
            members.push_back(h.label(v));
        }
        doc["edges"].push_back({{"id", e.id}, {"members", members}});
    }
    return doc.dump(2);
}

UnitPartition compute_units(const Hypergraph& h) {
    UnitPartition p;
    p.vertex_to_unit.assign(h.order(), 0);
    std::map<std::vector<Index>, Index> by_star;
    // Vertices are visited in index order, so units come out ordered by
    // their smallest member.
    for (Index v = 0; v < h.order(); ++v) {
        auto [it, inserted] = by_star.emplace(h.star(v), p.units.size());
        if (inserted) {
            p.units.push_back({h.star(v), {}});
        }
        p.units[it->second].members.push_back(v);
        p.vertex_to_unit[v] = it->second;
    }
    return p;
}

std::string unit_key(const Hypergraph& h, const Unit& unit) {
    std::string key;
    for (Index v : unit.members) {
        if (!key.empty()) {
            key += ',';
        }
        key += h.label(v);
    }
    return key;
}

ContractionResult unit_contraction(const Hypergraph& h, const UnitPartition& units) {
    std::vector<std::string> labels;
    for (const auto& u : units.units) {
        labels.push_back(unit_key(h, u));
    }
    std::vector<Hypergraph::EdgeSpec> specs;
    for (const auto& e : h.edges()) {
        std::set<Index> covering;
        for (Index v : e.members) {
            covering.insert(units.vertex_to_unit[v]);
        }
        Hypergraph::EdgeSpec spec{e.id, {}};
        for (Index u : covering) {
            spec.members.push_back(labels[u]);
        }
        specs.push_back(std::move(spec));
    }
    ContractionResult r;
    r.contracted = Hypergraph::build(std::move(labels), specs, Hypergraph::VertexOrder::as_given);
    r.edge_map.resize(h.size());
    for (Index e = 0; e < h.size(); ++e) {
        r.edge_map[e] = e;
    }
    return r;
}

ContractionResult unit_contraction(const Hypergraph& h) {
    return unit_contraction(h, compute_units(h));
}

}  // namespace hspec
