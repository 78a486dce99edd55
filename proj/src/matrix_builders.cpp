#include "hspec/matrix_builders.hpp"

#include <array>
#include <cmath>

namespace hspec {

namespace {

constexpr std::array<std::pair<MatrixKind, std::string_view>, 10> kKindNames{{
    {MatrixKind::adjacency_r, "adjacency_r"},
    {MatrixKind::adjacency_b, "adjacency_b"},
    {MatrixKind::transition, "transition"},
    {MatrixKind::laplacian_r, "laplacian_r"},
    {MatrixKind::laplacian_b, "laplacian_b"},
    {MatrixKind::signless_q, "signless_q"},
    {MatrixKind::general_adjacency, "general_adjacency"},
    {MatrixKind::general_laplacian, "general_laplacian"},
    {MatrixKind::general_signless, "general_signless"},
    {MatrixKind::unit_normalized, "unit_normalized"},
}};

bool needs_edge_size_two(MatrixKind kind) {
    switch (kind) {
        case MatrixKind::adjacency_b:
        case MatrixKind::transition:
        case MatrixKind::laplacian_b:
        case MatrixKind::signless_q:
            return true;
        default:
            return false;
    }
}

void check_weights(const Hypergraph& h, const WeightFunctions& w) {
    auto positive = [](double x) { return std::isfinite(x) && x > 0.0; };
    for (const auto& label : h.labels()) {
        auto it = w.delta_v.find(label);
        if (it == w.delta_v.end()) {
            throw InvalidArgument("delta_V has no value for vertex '" + label + "'");
        }
        if (!positive(it->second)) {
            throw InvalidArgument("delta_V value for vertex '" + label + "' is not positive");
        }
    }
    for (const auto& e : h.edges()) {
        auto it = w.delta_e.find(e.id);
        if (it == w.delta_e.end()) {
            throw InvalidArgument("delta_E has no value for hyperedge '" + e.id + "'");
        }
        if (!positive(it->second)) {
            throw InvalidArgument("delta_E value for hyperedge '" + e.id + "' is not positive");
        }
    }
    if (w.delta_v.size() != h.order()) {
        throw InvalidArgument("delta_V names a vertex that is not in the hypergraph");
    }
    if (w.delta_e.size() != h.size()) {
        throw InvalidArgument("delta_E names a hyperedge that is not in the hypergraph");
    }
}

// Sum over common edges e of g(e).
template <typename EdgeTerm>
double sum_common(const Hypergraph& h, Index u, Index v, EdgeTerm term) {
    const auto& a = h.star(u);
    const auto& b = h.star(v);
    double total = 0.0;
    auto i = a.begin();
    auto j = b.begin();
    while (i != a.end() && j != b.end()) {
        if (*i < *j) {
            ++i;
        } else if (*j < *i) {
            ++j;
        } else {
            total += term(*i);
            ++i;
            ++j;
        }
    }
    return total;
}

}  // namespace

std::string_view to_string(MatrixKind kind) {
    for (const auto& [k, name] : kKindNames) {
        if (k == kind) {
            return name;
        }
    }
    return "unknown";
}

MatrixKind parse_matrix_kind(std::string_view name) {
    for (const auto& [k, n] : kKindNames) {
        if (n == name) {
            return k;
        }
    }
    throw InvalidArgument("unknown matrix kind '" + std::string(name) + "'");
}

const std::vector<MatrixKind>& all_matrix_kinds() {
    static const std::vector<MatrixKind> kinds = [] {
        std::vector<MatrixKind> out;
        for (const auto& [k, name] : kKindNames) {
            out.push_back(k);
        }
        return out;
    }();
    return kinds;
}

bool is_general_kind(MatrixKind kind) {
    return kind == MatrixKind::general_adjacency || kind == MatrixKind::general_laplacian ||
           kind == MatrixKind::general_signless;
}

bool is_symmetric_kind(MatrixKind kind) {
    switch (kind) {
        case MatrixKind::adjacency_r:
        case MatrixKind::adjacency_b:
        case MatrixKind::laplacian_r:
        case MatrixKind::laplacian_b:
        case MatrixKind::signless_q:
            return true;
        default:
            return false;
    }
}

HypergraphMatrix build_matrix(const Hypergraph& h, MatrixKind kind,
                              const std::optional<WeightFunctions>& weights) {
    if (is_general_kind(kind)) {
        if (!weights) {
            throw InvalidArgument(std::string(to_string(kind)) + " requires weight functions");
        }
        check_weights(h, *weights);
    } else if (weights) {
        throw InvalidArgument(std::string(to_string(kind)) + " does not take weight functions");
    }
    if (needs_edge_size_two(kind)) {
        for (const auto& e : h.edges()) {
            if (e.members.size() < 2) {
                throw InvalidArgument(std::string(to_string(kind)) + " is undefined for singleton hyperedge '" +
                                      e.id + "'");
            }
        }
    }
    if (kind == MatrixKind::transition) {
        for (Index v = 0; v < h.order(); ++v) {
            if (h.star(v).empty()) {
                throw InvalidArgument("transition is undefined for vertex '" + h.label(v) +
                                      "' with an empty star");
            }
        }
    }

    const Index n = h.order();
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
    auto size_of = [&](Index e) { return static_cast<double>(h.edge(e).members.size()); };
    auto inv_size_less_one = [&](Index e) { return 1.0 / (size_of(e) - 1.0); };
    auto star_size = [&](Index u) { return static_cast<double>(h.star(u).size()); };

    std::vector<double> dv(n, 1.0);
    std::vector<double> de(h.size(), 1.0);
    if (weights) {
        for (Index v = 0; v < n; ++v) dv[v] = weights->delta_v.find(h.label(v))->second;
        for (Index e = 0; e < h.size(); ++e) de[e] = weights->delta_e.find(h.edge(e).id)->second;
    }
    auto weighted_sq = [&](Index e) { return de[e] / (size_of(e) * size_of(e)); };

    std::vector<double> unit_size;
    if (kind == MatrixKind::unit_normalized) {
        auto units = compute_units(h);
        unit_size.resize(n);
        for (Index v = 0; v < n; ++v) {
            unit_size[v] = static_cast<double>(units.units[units.vertex_to_unit[v]].members.size());
        }
    }

    for (Index u = 0; u < n; ++u) {
        const auto ui = static_cast<Eigen::Index>(u);
        for (Index v = 0; v < n; ++v) {
            const auto vi = static_cast<Eigen::Index>(v);
            if (u == v) {
                continue;
            }
            double value = 0.0;
            switch (kind) {
                case MatrixKind::adjacency_r:
                    value = static_cast<double>(h.common_edges(u, v));
                    break;
                case MatrixKind::laplacian_r:
                    value = -static_cast<double>(h.common_edges(u, v));
                    break;
                case MatrixKind::adjacency_b:
                case MatrixKind::signless_q:
                    value = sum_common(h, u, v, inv_size_less_one);
                    break;
                case MatrixKind::laplacian_b:
                    value = -sum_common(h, u, v, inv_size_less_one);
                    break;
                case MatrixKind::transition:
                    value = sum_common(h, u, v, inv_size_less_one) / star_size(u);
                    break;
                case MatrixKind::general_adjacency:
                case MatrixKind::general_signless:
                    value = sum_common(h, u, v, weighted_sq) / dv[u];
                    break;
                case MatrixKind::general_laplacian:
                    value = -sum_common(h, u, v, weighted_sq) / dv[u];
                    break;
                case MatrixKind::unit_normalized:
                    value = static_cast<double>(h.common_edges(u, v)) / unit_size[v];
                    break;
            }
            m(ui, vi) = value;
        }

        double diag = 0.0;
        switch (kind) {
            case MatrixKind::laplacian_r:
                diag = -m.row(ui).sum();
                break;
            case MatrixKind::laplacian_b:
            case MatrixKind::signless_q:
                diag = star_size(u);
                break;
            case MatrixKind::general_laplacian:
                for (Index e : h.star(u)) diag += de[e] / size_of(e);
                diag /= dv[u];
                break;
            case MatrixKind::general_signless:
                for (Index e : h.star(u)) diag += weighted_sq(e);
                diag /= dv[u];
                break;
            case MatrixKind::unit_normalized:
                diag = star_size(u) / unit_size[u];
                break;
            default:
                break;
        }
        m(ui, ui) = diag;
    }

    return HypergraphMatrix{kind, h.labels(), m.cast<Complex>()};
}

RowSumReport row_sum_check(const HypergraphMatrix& m, double tol) {
    RowSumReport report;
    switch (m.kind) {
        case MatrixKind::laplacian_r:
        case MatrixKind::laplacian_b:
        case MatrixKind::general_laplacian:
            report.applicable = true;
            report.expected = 0.0;
            break;
        case MatrixKind::transition:
            report.applicable = true;
            report.expected = 1.0;
            break;
        default:
            return report;
    }
    for (Eigen::Index r = 0; r < m.entries.rows(); ++r) {
        Complex s = m.entries.row(r).sum();
        report.row_sums.push_back(s);
        if (std::abs(s - report.expected) > tol) {
            report.violations.push_back(static_cast<Index>(r));
        }
    }
    return report;
}

}  // namespace hspec
