#include "hspec/documents.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace hspec {

namespace {

Json parse_json(std::string_view text, const std::string& what) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw ParseError("malformed " + what + " document: " + e.what());
    }
}

Complex parse_value(const Json& v) {
    if (v.is_number()) return {v.get<double>(), 0.0};
    if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number()) {
        return {v[0].get<double>(), v[1].get<double>()};
    }
    throw ParseError("state entries must be numbers or [re, im] pairs");
}

std::vector<std::string> split_key(const std::string& key) {
    std::vector<std::string> out;
    std::stringstream ss(key);
    std::string part;
    while (std::getline(ss, part, ',')) out.push_back(part);
    return out;
}

Index unit_from_key(const Hypergraph& h, const UnitPartition& units, const std::string& key) {
    std::vector<Index> members;
    for (const auto& label : split_key(key)) {
        auto v = h.find_vertex(label);
        if (!v) throw InvalidArgument("unit key '" + key + "' names unknown vertex '" + label + "'");
        members.push_back(*v);
    }
    std::sort(members.begin(), members.end());
    if (members.empty()) throw InvalidArgument("empty unit key");
    const Index u = units.vertex_to_unit[members.front()];
    if (units.units[u].members != members) {
        throw InvalidArgument("'" + key + "' is not a unit");
    }
    return u;
}

Json source_json(const BlockSource& s) {
    Json j;
    switch (s.kind) {
        case BlockSource::Kind::rotation:
            j["kind"] = "rotation";
            break;
        case BlockSource::Kind::orbit_quotient:
            j["kind"] = "orbit_quotient";
            break;
        case BlockSource::Kind::unit:
            j["kind"] = "unit";
            break;
    }
    j["factor"] = s.factor;
    j["omega_k"] = s.omega_k;
    j["tag"] = s.tag();
    return j;
}

std::string format_number(double x) {
    if (!std::isfinite(x)) return "null";
    if (x == 0.0) return "0";  // folds -0
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

bool is_scalar(const Json& j) { return !j.is_object() && !j.is_array(); }

bool is_flat(const Json& j) {
    if (!j.is_array()) return false;
    for (const auto& e : j) {
        if (is_scalar(e)) continue;
        // [re, im] pairs stay inline too.
        if (e.is_array() && e.size() <= 2 && std::all_of(e.begin(), e.end(), is_scalar)) continue;
        return false;
    }
    return true;
}

void dump(const Json& j, int indent, std::string& out) {
    const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
    const std::string inner(static_cast<std::size_t>(indent + 1) * 2, ' ');
    switch (j.type()) {
        case Json::value_t::number_float:
            out += format_number(j.get<double>());
            return;
        case Json::value_t::object: {
            if (j.empty()) {
                out += "{}";
                return;
            }
            out += "{\n";
            bool first = true;
            for (auto it = j.begin(); it != j.end(); ++it) {
                if (!first) out += ",\n";
                first = false;
                out += inner + Json(it.key()).dump() + ": ";
                dump(it.value(), indent + 1, out);
            }
            out += "\n" + pad + "}";
            return;
        }
        case Json::value_t::array: {
            if (j.empty()) {
                out += "[]";
                return;
            }
            if (is_flat(j)) {
                out += "[";
                bool first = true;
                for (const auto& e : j) {
                    if (!first) out += ", ";
                    first = false;
                    dump(e, indent + 1, out);
                }
                out += "]";
                return;
            }
            out += "[\n";
            bool first = true;
            for (const auto& e : j) {
                if (!first) out += ",\n";
                first = false;
                out += inner;
                dump(e, indent + 1, out);
            }
            out += "\n" + pad + "]";
            return;
        }
        default:
            out += j.dump();
    }
}

}  // namespace

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

WeightFunctions parse_weights(std::string_view text) {
    Json doc = parse_json(text, "weight");
    if (!doc.is_object() || !doc.contains("delta_V") || !doc.contains("delta_E")) {
        throw ParseError("weight document must have \"delta_V\" and \"delta_E\" objects");
    }
    WeightFunctions w;
    try {
        for (const auto& [k, v] : doc.at("delta_V").items()) w.delta_v[k] = v.get<double>();
        for (const auto& [k, v] : doc.at("delta_E").items()) w.delta_e[k] = v.get<double>();
    } catch (const Json::exception& e) {
        throw ParseError(std::string("malformed weight document: ") + e.what());
    }
    return w;
}

Permutation parse_permutation(const Hypergraph& h, std::string_view text) {
    Json doc = parse_json(text, "permutation");
    if (!doc.is_object() || !doc.contains("map") || !doc.at("map").is_object()) {
        throw ParseError("permutation document must have a \"map\" object");
    }
    std::vector<Index> map(h.order());
    for (Index v = 0; v < h.order(); ++v) map[v] = v;
    for (const auto& [from, to] : doc.at("map").items()) {
        if (!to.is_string()) throw ParseError("permutation targets must be vertex labels");
        map[h.index_of(from)] = h.index_of(to.get<std::string>());
    }
    return Permutation(std::move(map));
}

std::vector<Index> parse_unit_map(const Hypergraph& h, const UnitPartition& units, std::string_view text) {
    Json doc = parse_json(text, "unit map");
    if (!doc.is_object() || !doc.contains("unit_map") || !doc.at("unit_map").is_object()) {
        throw ParseError("unit-automorphism document must have a \"unit_map\" object");
    }
    std::vector<Index> map(units.count());
    for (Index i = 0; i < units.count(); ++i) map[i] = i;
    for (const auto& [from, to] : doc.at("unit_map").items()) {
        if (!to.is_string()) throw ParseError("unit map targets must be unit keys");
        map[unit_from_key(h, units, from)] = unit_from_key(h, units, to.get<std::string>());
    }
    return map;
}

CVector parse_state(const Hypergraph& h, std::string_view text) {
    Json doc = parse_json(text, "state");
    const Json& body = doc.is_object() && doc.contains("x0") ? doc.at("x0") : doc;
    CVector x = CVector::Zero(static_cast<Eigen::Index>(h.order()));
    if (body.is_array()) {
        if (body.size() != h.order()) {
            throw DimensionMismatch("state has " + std::to_string(body.size()) + " entries for " +
                                    std::to_string(h.order()) + " vertices");
        }
        for (Index v = 0; v < h.order(); ++v) x(static_cast<Eigen::Index>(v)) = parse_value(body[v]);
    } else if (body.is_object()) {
        for (const auto& [label, v] : body.items()) x(static_cast<Eigen::Index>(h.index_of(label))) = parse_value(v);
    } else {
        throw ParseError("state document must be a list or an object keyed by label");
    }
    return x;
}

Json complex_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Json vector_json(const CVector& x) {
    Json j = Json::array();
    for (Eigen::Index i = 0; i < x.size(); ++i) j.push_back(complex_json(x(i)));
    return j;
}

Json matrix_json(const CMatrix& m) {
    Json j = Json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        for (Eigen::Index c = 0; c < m.cols(); ++c) j.push_back(complex_json(m(r, c)));
    }
    return j;
}

Json units_document(const Hypergraph& h, const UnitPartition& units) {
    Json doc;
    doc["count"] = units.count();
    doc["units"] = Json::array();
    for (const auto& u : units.units) {
        Json gen = Json::array();
        for (Index e : u.generating_set) gen.push_back(h.edge(e).id);
        Json members = Json::array();
        for (Index v : u.members) members.push_back(h.label(v));
        doc["units"].push_back({{"key", unit_key(h, u)}, {"members", members}, {"generating_set", gen}});
    }
    return doc;
}

Json matrix_document(const HypergraphMatrix& m) {
    Json doc;
    doc["kind"] = std::string(to_string(m.kind));
    doc["order"] = m.order();
    doc["index"] = m.index;
    doc["entries"] = matrix_json(m.entries);
    return doc;
}

Json decomposition_document(const SpectralDecomposition& d) {
    Json doc;
    doc["dimension"] = d.dimension;
    doc["blocks"] = Json::array();
    for (const auto& b : d.blocks) {
        Json values = Json::array();
        for (const auto& z : b.eigenvalues) values.push_back(complex_json(z));
        doc["blocks"].push_back({{"source", source_json(b.source)},
                                 {"order", b.source.order},
                                 {"size", b.eigenvalues.size()},
                                 {"eigenvalues", values},
                                 {"defective", b.defective}});
    }
    Json all = Json::array();
    for (const auto& z : d.eigenvalues()) all.push_back(complex_json(z));
    doc["eigenvalues"] = all;
    doc["defective"] = d.defective();
    doc["lifted"] = Json::array();
    for (const auto& lp : d.lifted) {
        doc["lifted"].push_back(
            {{"lambda", complex_json(lp.lambda)}, {"vector", vector_json(lp.vector)}, {"source", lp.source.tag()}});
    }
    return doc;
}

Json verification_json(const SpectrumReport& r) {
    Json doc;
    doc["verdict"] = r.passed ? "pass" : "fail";
    doc["tolerance"] = r.tolerance;
    double worst = 0.0;
    for (double x : r.residuals) worst = std::max(worst, x);
    doc["max_residual"] = worst;
    Json dense = Json::array();
    for (const auto& z : r.eigenvalues) dense.push_back(complex_json(z));
    doc["eigenvalues"] = dense;
    if (r.match) {
        double dist = 0.0;
        for (const auto& p : r.match->pairs) dist = std::max(dist, p.distance);
        doc["max_match_distance"] = dist;
    }
    doc["witnesses"] = r.witnesses;
    return doc;
}

Json trajectory_document(const Trajectory& t) {
    Json doc;
    doc["steps"] = t.states.empty() ? 0 : t.states.size() - 1;
    doc["sync_log"] = t.sync_log;
    doc["final_state"] = t.states.empty() ? Json::array() : vector_json(t.states.back());
    return doc;
}

std::string dump_json(const Json& doc) {
    std::string out;
    dump(doc, 0, out);
    out += "\n";
    return out;
}

}  // namespace hspec
