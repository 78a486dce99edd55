#include "hspec/unit_symmetry.hpp"

#include <algorithm>

namespace hspec {

namespace {

Eigen::Index ei(Index i) { return static_cast<Eigen::Index>(i); }

void check_units_cover(const CMatrix& m, const UnitPartition& units) {
    if (m.rows() != m.cols() || static_cast<Index>(m.rows()) != units.vertex_to_unit.size()) {
        throw DimensionMismatch("matrix does not index the unit partition's vertices");
    }
}

[[noreturn]] void fail(Index unit, const std::string& condition, const std::string& detail) {
    throw NotUnitCompatible("unit " + std::to_string(unit) + " violates the " + condition + " condition: " + detail,
                            unit, condition);
}

}  // namespace

UnitCompatibleProfile profile_unit_compatibility(const CMatrix& m, const UnitPartition& units, double tol) {
    check_units_cover(m, units);
    const Index n = units.vertex_to_unit.size();
    UnitCompatibleProfile p;
    p.s = CMatrix::Zero(ei(units.count()), ei(n));
    p.b = CMatrix::Zero(ei(units.count()), ei(units.count()));
    for (Index i = 0; i < units.count(); ++i) {
        const auto& members = units.units[i].members;
        const Index u0 = members.front();
        for (Index u : members) {
            if (std::abs(m(ei(u), ei(u)) - m(ei(u0), ei(u0))) > tol) {
                fail(i, "diagonal", "m(" + std::to_string(u) + "," + std::to_string(u) + ") differs from m(" +
                                        std::to_string(u0) + "," + std::to_string(u0) + ")");
            }
        }
        for (Index a = 0; a < members.size(); ++a) {
            for (Index b = a + 1; b < members.size(); ++b) {
                const Index u = members[a], v = members[b];
                if (std::abs(m(ei(u), ei(v)) - m(ei(v), ei(u))) > tol) {
                    fail(i, "symmetry", "m(" + std::to_string(u) + "," + std::to_string(v) + ") != m(" +
                                            std::to_string(v) + "," + std::to_string(u) + ")");
                }
            }
        }
        for (Index u : members) {
            if (u == u0) continue;
            for (Index w = 0; w < n; ++w) {
                if (w == u || w == u0) continue;
                if (std::abs(m(ei(u), ei(w)) - m(ei(u0), ei(w))) > tol) {
                    fail(i, "row", "vertices " + std::to_string(u0) + " and " + std::to_string(u) +
                                       " differ toward vertex " + std::to_string(w));
                }
                if (std::abs(m(ei(w), ei(u)) - m(ei(w), ei(u0))) > tol) {
                    fail(i, "column", "vertices " + std::to_string(u0) + " and " + std::to_string(u) +
                                          " differ from vertex " + std::to_string(w));
                }
            }
        }
        p.d.push_back(m(ei(u0), ei(u0)));
        p.r.push_back(members.size() >= 2 ? std::optional<Complex>(m(ei(u0), ei(members[1]))) : std::nullopt);
        for (Index w = 0; w < n; ++w) {
            if (units.vertex_to_unit[w] != i) {
                p.s(ei(i), ei(w)) = m(ei(u0), ei(w));
            }
            p.b(ei(i), ei(units.vertex_to_unit[w])) += m(ei(u0), ei(w));
        }
    }
    return p;
}

std::vector<UnitEigenpair> unit_eigenvalues(const CMatrix& m, const UnitPartition& units, double tol) {
    const auto profile = profile_unit_compatibility(m, units, tol);
    const Index n = units.vertex_to_unit.size();
    std::vector<UnitEigenpair> out;
    for (Index i = 0; i < units.count(); ++i) {
        const auto& members = units.units[i].members;
        if (members.size() < 2) continue;
        UnitEigenpair e;
        e.unit = i;
        e.lambda = profile.d[i] - *profile.r[i];
        e.multiplicity = members.size() - 1;
        for (Index k = 1; k < members.size(); ++k) {
            CVector y = CVector::Zero(ei(n));
            y(ei(members[k])) = 1.0;
            y(ei(members[0])) = -1.0;
            e.basis.push_back(std::move(y));
        }
        out.push_back(std::move(e));
    }
    return out;
}

std::vector<MergedUnitEigenvalue> merge_unit_eigenvalues(const std::vector<UnitEigenpair>& pairs, double merge_tol) {
    std::vector<MergedUnitEigenvalue> out;
    for (const auto& p : pairs) {
        auto it = std::find_if(out.begin(), out.end(),
                               [&](const MergedUnitEigenvalue& m) { return std::abs(m.lambda - p.lambda) <= merge_tol; });
        if (it == out.end()) {
            out.push_back({p.lambda, p.multiplicity, {p.unit}});
        } else {
            it->multiplicity += p.multiplicity;
            it->units.push_back(p.unit);
        }
    }
    std::sort(out.begin(), out.end(), [](const MergedUnitEigenvalue& x, const MergedUnitEigenvalue& y) {
        if (x.lambda.real() != y.lambda.real()) return x.lambda.real() < y.lambda.real();
        return x.lambda.imag() < y.lambda.imag();
    });
    return out;
}

CMatrix unit_quotient(const CMatrix& m, const UnitPartition& units, double tol) {
    return profile_unit_compatibility(m, units, tol).b;
}

CVector blow_up(const CVector& y, const UnitPartition& units) {
    if (static_cast<Index>(y.size()) != units.count()) {
        throw DimensionMismatch("vector length does not match the number of units");
    }
    CVector out(ei(units.vertex_to_unit.size()));
    for (Index v = 0; v < units.vertex_to_unit.size(); ++v) {
        out(ei(v)) = y(ei(units.vertex_to_unit[v]));
    }
    return out;
}

UnitAutomorphism validate_unit_automorphism(const Hypergraph& h, const UnitPartition& units,
                                            const std::vector<Index>& unit_map) {
    if (unit_map.size() != units.count()) {
        throw DimensionMismatch("unit map size does not match the number of units");
    }
    // Permutation validates the bijection.
    const Permutation perm = [&] {
        try {
            return Permutation(unit_map);
        } catch (const InvalidArgument&) {
            throw InvalidArgument("unit map is not a bijection on units");
        }
    }();
    UnitAutomorphism ua;
    ua.unit_map = unit_map;
    ua.induced_edge_map.resize(h.size());
    for (Index e = 0; e < h.size(); ++e) {
        std::vector<Index> covered;
        for (Index v : h.edge(e).members) covered.push_back(units.vertex_to_unit[v]);
        std::sort(covered.begin(), covered.end());
        covered.erase(std::unique(covered.begin(), covered.end()), covered.end());
        std::vector<Index> image;
        for (Index u : covered) {
            const auto& members = units.units[perm(u)].members;
            image.insert(image.end(), members.begin(), members.end());
        }
        std::sort(image.begin(), image.end());
        auto target = h.find_edge(image);
        if (!target) {
            std::string names;
            for (Index v : image) names += (names.empty() ? "" : ",") + h.label(v);
            throw NotAnAutomorphism("unit image {" + names + "} of hyperedge '" + h.edge(e).id + "' is not a hyperedge",
                                    h.edge(e).id);
        }
        ua.induced_edge_map[e] = *target;
    }
    for (Index i = 0; i < units.count(); ++i) {
        if (units.units[i].members.size() != units.units[unit_map[i]].members.size()) {
            ua.cardinality_preserving = false;
        }
    }
    return ua;
}

UnitAutomorphism induced_unit_automorphism(const Hypergraph& h, const Automorphism& f, const UnitPartition& units) {
    std::vector<Index> map(units.count());
    for (Index i = 0; i < units.count(); ++i) {
        map[i] = units.vertex_to_unit[f.perm(units.units[i].members.front())];
    }
    return validate_unit_automorphism(h, units, map);
}

Automorphism lift_cardinality_preserving(const UnitAutomorphism& ua, const Hypergraph& h, const UnitPartition& units) {
    std::vector<Index> map(h.order());
    for (Index i = 0; i < units.count(); ++i) {
        const auto& from = units.units[i].members;
        const auto& to = units.units[ua.unit_map[i]].members;
        if (from.size() != to.size()) {
            throw NotCardinalityPreserving("unit {" + unit_key(h, units.units[i]) + "} of size " +
                                               std::to_string(from.size()) + " maps to unit {" +
                                               unit_key(h, units.units[ua.unit_map[i]]) + "} of size " +
                                               std::to_string(to.size()),
                                           i, ua.unit_map[i]);
        }
        for (Index k = 0; k < from.size(); ++k) map[from[k]] = to[k];
    }
    return validate_automorphism(h, Permutation(std::move(map)));
}

CompatibilityReport is_unit_automorphism_compatible(const CMatrix& m, const UnitAutomorphism& ua,
                                                    const UnitPartition& units, double tol) {
    return is_compatible(unit_quotient(m, units, tol), Permutation(ua.unit_map), tol);
}

SpectralDecomposition decompose_unit_automorphism(const CMatrix& m, const UnitAutomorphism& ua,
                                                  const UnitPartition& units, const EngineOptions& opts) {
    const auto profile = profile_unit_compatibility(m, units, opts.compat_tol);
    const Permutation perm(ua.unit_map);
    require_compatible(profile.b, perm, opts.compat_tol, "unit quotient is not compatible with the unit map");
    SpectralDecomposition inner = decompose_automorphism(profile.b, perm, opts);

    SpectralDecomposition d;
    d.dimension = units.vertex_to_unit.size();
    for (const auto& ue : unit_eigenvalues(m, units, opts.compat_tol)) {
        SpectralBlock b;
        b.source = {BlockSource::Kind::unit, ue.unit, 0, 0};
        const auto k = ei(ue.multiplicity);
        b.matrix = ue.lambda * CMatrix::Identity(k, k);
        b.eigenvalues.assign(ue.multiplicity, ue.lambda);
        for (const auto& y : ue.basis) {
            b.eigenpairs.push_back({ue.lambda, y});
            d.lifted.push_back({ue.lambda, y.normalized(), b.source});
        }
        d.blocks.push_back(std::move(b));
    }
    for (auto& b : inner.blocks) d.blocks.push_back(std::move(b));
    for (auto& lp : inner.lifted) {
        d.lifted.push_back({lp.lambda, blow_up(lp.vector, units).normalized(), lp.source});
    }
    if (d.eigenvalue_count() != d.dimension) {
        throw Error("unit decomposition yields " + std::to_string(d.eigenvalue_count()) + " eigenvalues for dimension " +
                    std::to_string(d.dimension));
    }
    return d;
}

}  // namespace hspec
