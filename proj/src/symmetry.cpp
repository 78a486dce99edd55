#include "hspec/symmetry.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace hspec {

Permutation::Permutation(std::vector<Index> mapping) : map_(std::move(mapping)) {
    std::vector<bool> hit(map_.size(), false);
    for (Index v : map_) {
        if (v >= map_.size() || hit[v]) {
            throw InvalidArgument("mapping is not a bijection");
        }
        hit[v] = true;
    }
}

Permutation Permutation::identity(Index n) {
    std::vector<Index> m(n);
    std::iota(m.begin(), m.end(), Index{0});
    return Permutation(std::move(m));
}

Permutation Permutation::inverse() const {
    std::vector<Index> inv(map_.size());
    for (Index v = 0; v < map_.size(); ++v) {
        inv[map_[v]] = v;
    }
    return Permutation(std::move(inv));
}

Permutation Permutation::compose(const Permutation& other) const {
    if (other.size() != size()) {
        throw DimensionMismatch("cannot compose permutations of different sizes");
    }
    std::vector<Index> out(size());
    for (Index v = 0; v < size(); ++v) {
        out[v] = map_[other.map_[v]];
    }
    return Permutation(std::move(out));
}

Permutation Permutation::power(long long k) const {
    const long long m = static_cast<long long>(order());
    long long e = ((k % m) + m) % m;
    std::vector<Index> out(size());
    for (Index v = 0; v < size(); ++v) {
        Index w = v;
        for (long long i = 0; i < e; ++i) {
            w = map_[w];
        }
        out[v] = w;
    }
    return Permutation(std::move(out));
}

bool Permutation::is_identity() const {
    for (Index v = 0; v < size(); ++v) {
        if (map_[v] != v) {
            return false;
        }
    }
    return true;
}

Index Permutation::order() const {
    Index m = 1;
    for (const auto& c : cycles()) {
        m = std::lcm(m, c.size());
    }
    return m;
}

std::vector<std::vector<Index>> Permutation::cycles() const {
    std::vector<std::vector<Index>> out;
    std::vector<bool> seen(size(), false);
    for (Index v = 0; v < size(); ++v) {
        if (seen[v]) {
            continue;
        }
        std::vector<Index> cycle;
        for (Index w = v; !seen[w]; w = map_[w]) {
            seen[w] = true;
            cycle.push_back(w);
        }
        out.push_back(std::move(cycle));
    }
    return out;
}

Automorphism validate_automorphism(const Hypergraph& h, const Permutation& perm) {
    if (perm.size() != h.order()) {
        throw DimensionMismatch("permutation size does not match the vertex count");
    }
    Automorphism a{perm, std::vector<Index>(h.size()), perm.order()};
    for (Index e = 0; e < h.size(); ++e) {
        std::vector<Index> image;
        for (Index v : h.edge(e).members) {
            image.push_back(perm(v));
        }
        std::sort(image.begin(), image.end());
        auto target = h.find_edge(image);
        if (!target) {
            std::string members;
            for (Index v : image) {
                members += (members.empty() ? "" : ",") + h.label(v);
            }
            throw NotAnAutomorphism("image {" + members + "} of hyperedge '" + h.edge(e).id +
                                        "' is not a hyperedge",
                                    h.edge(e).id);
        }
        a.edge_map[e] = *target;
    }
    // Injective on a finite set, hence a bijection on E(H).
    return a;
}

CMatrix permutation_matrix(const Permutation& perm) {
    const auto n = static_cast<Eigen::Index>(perm.size());
    CMatrix p = CMatrix::Zero(n, n);
    for (Index u = 0; u < perm.size(); ++u) {
        p(static_cast<Eigen::Index>(u), static_cast<Eigen::Index>(perm(u))) = 1.0;
    }
    return p;
}

CompatibilityReport is_compatible(const CMatrix& m, const Permutation& perm, double tol) {
    if (m.rows() != m.cols() || static_cast<Index>(m.rows()) != perm.size()) {
        throw DimensionMismatch("matrix and permutation index different vertex sets");
    }
    CompatibilityReport r;
    const Index n = perm.size();
    for (Index u = 0; u < n; ++u) {
        for (Index v = 0; v < n; ++v) {
            const Complex a = m(static_cast<Eigen::Index>(u), static_cast<Eigen::Index>(v));
            const Complex b = m(static_cast<Eigen::Index>(perm(u)), static_cast<Eigen::Index>(perm(v)));
            const double d = std::abs(a - b);
            r.max_deviation = std::max(r.max_deviation, d);
            if (d > tol && !r.witness) {
                r.witness = CompatibilityWitness{u, v, a, b};
            }
        }
    }
    r.compatible = !r.witness.has_value();
    return r;
}

void require_compatible(const CMatrix& m, const Permutation& perm, double tol, const std::string& context) {
    auto r = is_compatible(m, perm, tol);
    if (!r.compatible) {
        const auto& w = *r.witness;
        throw IncompatibleMatrix(context + ": entry (" + std::to_string(w.row) + "," + std::to_string(w.col) +
                                     ") differs from its image by " + std::to_string(r.max_deviation),
                                 w);
    }
}

double check_commutation(const CMatrix& m, const Permutation& perm) {
    if (static_cast<Index>(m.rows()) != perm.size()) {
        throw DimensionMismatch("matrix and permutation index different vertex sets");
    }
    CMatrix p = permutation_matrix(perm);
    return (m * p - p * m).cwiseAbs().maxCoeff();
}

OrbitPartition orbits(const Permutation& perm) {
    OrbitPartition p;
    p.vertex_to_orbit.assign(perm.size(), 0);
    for (auto cycle : perm.cycles()) {
        std::sort(cycle.begin(), cycle.end());
        for (Index v : cycle) {
            p.vertex_to_orbit[v] = p.orbits.size();
        }
        p.orbits.push_back(std::move(cycle));
    }
    return p;
}

OrbitPartition make_partition(const std::vector<std::vector<Index>>& cells, Index n) {
    OrbitPartition p;
    p.vertex_to_orbit.assign(n, n);
    for (const auto& cell : cells) {
        if (cell.empty()) {
            throw InvalidArgument("partition has an empty cell");
        }
        for (Index v : cell) {
            if (v >= n) {
                throw InvalidArgument("partition cell references index " + std::to_string(v) + " out of range");
            }
            if (p.vertex_to_orbit[v] != n) {
                throw InvalidArgument("index " + std::to_string(v) + " appears in two partition cells");
            }
            p.vertex_to_orbit[v] = p.orbits.size();
        }
        auto sorted = cell;
        std::sort(sorted.begin(), sorted.end());
        p.orbits.push_back(std::move(sorted));
    }
    for (Index v = 0; v < n; ++v) {
        if (p.vertex_to_orbit[v] == n) {
            throw InvalidArgument("partition does not cover index " + std::to_string(v));
        }
    }
    return p;
}

namespace {

// Row-block sums S(u, j) = sum_{w in cell j} m_uw.
CMatrix block_row_sums(const CMatrix& m, const OrbitPartition& p) {
    CMatrix s = CMatrix::Zero(m.rows(), static_cast<Eigen::Index>(p.count()));
    for (Eigen::Index u = 0; u < m.rows(); ++u) {
        for (Eigen::Index w = 0; w < m.cols(); ++w) {
            s(u, static_cast<Eigen::Index>(p.vertex_to_orbit[static_cast<Index>(w)])) += m(u, w);
        }
    }
    return s;
}

}  // namespace

bool is_equitable(const CMatrix& m, const std::vector<std::vector<Index>>& cells, double tol) {
    auto p = make_partition(cells, static_cast<Index>(m.rows()));
    CMatrix s = block_row_sums(m, p);
    for (const auto& cell : p.orbits) {
        for (Index u : cell) {
            if ((s.row(static_cast<Eigen::Index>(u)) - s.row(static_cast<Eigen::Index>(cell.front())))
                    .cwiseAbs()
                    .maxCoeff() > tol) {
                return false;
            }
        }
    }
    return true;
}

CMatrix orbit_quotient(const CMatrix& m, const OrbitPartition& partition, double tol) {
    if (static_cast<Index>(m.rows()) != partition.vertex_to_orbit.size()) {
        throw DimensionMismatch("partition does not index the matrix rows");
    }
    if (!is_equitable(m, partition.orbits, tol)) {
        throw NotEquitable("partition is not equitable for the matrix");
    }
    CMatrix s = block_row_sums(m, partition);
    const auto k = static_cast<Eigen::Index>(partition.count());
    CMatrix b(k, k);
    for (Eigen::Index i = 0; i < k; ++i) {
        b.row(i) = s.row(static_cast<Eigen::Index>(partition.orbits[static_cast<Index>(i)].front()));
    }
    return b;
}

std::vector<Index> Rotation::active_domain() const {
    std::vector<Index> out;
    for (const auto& c : components) {
        out.insert(out.end(), c.begin(), c.end());
    }
    std::sort(out.begin(), out.end());
    return out;
}

Rotation make_rotation(const Permutation& perm, std::vector<std::vector<Index>> components) {
    if (components.size() < 2) {
        throw InvalidArgument("a rotation needs at least two components");
    }
    const Index width = components.front().size();
    std::vector<bool> active(perm.size(), false);
    for (const auto& c : components) {
        if (c.size() != width) {
            throw InvalidArgument("rotation components differ in size");
        }
        for (Index v : c) {
            if (v >= perm.size() || active[v]) {
                throw InvalidArgument("rotation components overlap or leave the vertex range");
            }
            active[v] = true;
        }
    }
    const Index n = components.size();
    for (Index i = 0; i < n; ++i) {
        const auto& from = components[i];
        const auto& to = components[(i + 1) % n];
        for (Index k = 0; k < width; ++k) {
            if (perm(from[k]) != to[k]) {
                throw InvalidArgument("permutation does not shift rotation components positionally");
            }
        }
    }
    Rotation r;
    r.order = n;
    r.components = std::move(components);
    std::vector<Index> map(perm.size());
    for (Index v = 0; v < perm.size(); ++v) {
        if (active[v]) {
            map[v] = perm(v);
        } else {
            map[v] = v;
            r.invariant_set.push_back(v);
        }
    }
    r.underlying = Permutation(std::move(map));
    return r;
}

RotationDecomposition rotation_decomposition(const Permutation& perm) {
    RotationDecomposition d;
    std::map<Index, std::vector<std::vector<Index>>> by_length;
    for (const auto& cycle : perm.cycles()) {
        if (cycle.size() == 1) {
            d.global_fixed.push_back(cycle.front());
        } else {
            by_length[cycle.size()].push_back(cycle);
        }
    }
    for (const auto& [length, cycles] : by_length) {
        // cycles() starts each cycle at its smallest element and orders the
        // cycles by it, so U_0 is sorted and U_i[k] = f^i(U_0[k]).
        std::vector<std::vector<Index>> components(length);
        for (const auto& cycle : cycles) {
            for (Index i = 0; i < length; ++i) {
                components[i].push_back(cycle[i]);
            }
        }
        d.factors.push_back(make_rotation(perm, std::move(components)));
    }
    return d;
}

std::optional<Index> simple_eigenvalue_bound(const Rotation& rot, bool symmetric) {
    if (!symmetric) {
        return std::nullopt;
    }
    const Index base = rot.base().size();
    const Index fixed = rot.invariant_set.size();
    return rot.order % 2 == 1 ? base + fixed : 2 * base + fixed;
}

}  // namespace hspec
