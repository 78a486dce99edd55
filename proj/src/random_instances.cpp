#include "hspec/random_instances.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace hspec {

const std::vector<std::vector<Index>>& coprime_cycle_types() {
    static const std::vector<std::vector<Index>> pool = {
        {2}, {3}, {5}, {7}, {2, 2, 3}, {2, 3}, {3, 4}, {2, 5}, {2, 3, 5}, {4, 4, 3},
        {3, 3, 4}, {2, 2, 2, 3, 3}, {3, 3, 3}, {2, 2, 2}, {5, 3}, {4, 3}, {7, 2},
    };
    return pool;
}

namespace {

std::vector<Index> orbit_of_set(const Permutation& f, std::vector<Index> s, std::vector<std::vector<Index>>& out) {
    std::sort(s.begin(), s.end());
    const auto start = s;
    do {
        out.push_back(s);
        for (auto& v : s) v = f(v);
        std::sort(s.begin(), s.end());
    } while (s != start);
    return start;
}

}  // namespace

RandomInstance random_symmetric_hypergraph(std::mt19937_64& rng, const std::vector<Index>& cycle_type,
                                           Index fixed_points) {
    const Index active = std::accumulate(cycle_type.begin(), cycle_type.end(), Index{0});
    const Index n = active + fixed_points;
    if (n < 2) throw InvalidArgument("random hypergraph needs at least two vertices");

    std::vector<Index> slots(n);
    std::iota(slots.begin(), slots.end(), Index{0});
    std::shuffle(slots.begin(), slots.end(), rng);
    std::vector<Index> map(n);
    std::iota(map.begin(), map.end(), Index{0});
    Index pos = 0;
    for (Index len : cycle_type) {
        for (Index i = 0; i < len; ++i) map[slots[pos + i]] = slots[pos + (i + 1) % len];
        pos += len;
    }
    Permutation f(map);

    std::vector<std::vector<Index>> sets;
    std::uniform_int_distribution<Index> seeds(2, 4);
    std::uniform_int_distribution<Index> width(2, std::min<Index>(5, n));
    std::uniform_int_distribution<Index> pick(0, n - 1);
    const Index count = seeds(rng);
    for (Index s = 0; s < count; ++s) {
        std::vector<Index> all(n);
        std::iota(all.begin(), all.end(), Index{0});
        std::shuffle(all.begin(), all.end(), rng);
        all.resize(width(rng));
        orbit_of_set(f, all, sets);
    }
    for (;;) {
        std::vector<bool> covered(n, false);
        for (const auto& s : sets)
            for (Index v : s) covered[v] = true;
        auto it = std::find(covered.begin(), covered.end(), false);
        if (it == covered.end()) break;
        const Index v = static_cast<Index>(it - covered.begin());
        Index w = pick(rng);
        while (w == v) w = pick(rng);
        orbit_of_set(f, {v, w}, sets);
    }
    std::set<std::vector<Index>> unique(sets.begin(), sets.end());

    std::vector<std::string> labels;
    for (Index v = 0; v < n; ++v) labels.push_back(std::to_string(v + 1));
    std::vector<Hypergraph::EdgeSpec> specs;
    Index id = 0;
    for (const auto& s : unique) {
        std::vector<std::string> members;
        for (Index v : s) members.push_back(labels[v]);
        specs.push_back({"e" + std::to_string(id++), members});
    }
    RandomInstance out{Hypergraph::build(labels, specs), f, cycle_type, fixed_points};
    validate_automorphism(out.h, out.f);
    return out;
}

RandomInstance random_instance(std::mt19937_64& rng) {
    const auto& pool = coprime_cycle_types();
    std::uniform_int_distribution<std::size_t> which(0, pool.size() - 1);
    const auto& type = pool[which(rng)];
    const Index active = std::accumulate(type.begin(), type.end(), Index{0});
    std::uniform_int_distribution<Index> fixed(0, std::min<Index>(3, 14 - active));
    return random_symmetric_hypergraph(rng, type, fixed(rng));
}

CMatrix orbit_average(const CMatrix& r, const Permutation& f) {
    if (r.rows() != r.cols() || static_cast<Index>(r.rows()) != f.size()) {
        throw DimensionMismatch("matrix and permutation index different vertex sets");
    }
    const Index order = f.order();
    const auto n = r.rows();
    CMatrix m = CMatrix::Zero(n, n);
    Permutation g = Permutation::identity(f.size());
    for (Index i = 0; i < order; ++i) {
        for (Eigen::Index u = 0; u < n; ++u) {
            for (Eigen::Index v = 0; v < n; ++v) {
                m(u, v) += r(static_cast<Eigen::Index>(g(static_cast<Index>(u))),
                             static_cast<Eigen::Index>(g(static_cast<Index>(v))));
            }
        }
        g = f.compose(g);
    }
    return m / static_cast<double>(order);
}

CMatrix random_compatible_matrix(std::mt19937_64& rng, const Permutation& f, bool real_symmetric) {
    const auto n = static_cast<Eigen::Index>(f.size());
    std::normal_distribution<double> gauss(0.0, 1.0);
    CMatrix r(n, n);
    for (Eigen::Index u = 0; u < n; ++u) {
        for (Eigen::Index v = 0; v < n; ++v) {
            const double re = gauss(rng);
            const double im = real_symmetric ? 0.0 : gauss(rng);
            r(u, v) = Complex(re, im);
        }
    }
    if (real_symmetric) {
        CMatrix t = r.transpose();
        r = (r + t) * 0.5;
    }
    return orbit_average(r, f);
}

}  // namespace hspec
