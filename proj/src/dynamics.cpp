#include "hspec/dynamics.hpp"

#include <algorithm>
#include <cmath>

namespace hspec {

std::vector<double> orbit_deviation(const CVector& x, const OrbitPartition& cells) {
    if (static_cast<Index>(x.size()) != cells.vertex_to_orbit.size()) {
        throw DimensionMismatch("state and partition index different vertex sets");
    }
    std::vector<double> out;
    out.reserve(cells.count());
    for (const auto& cell : cells.orbits) {
        Complex mean = 0.0;
        for (Index v : cell) mean += x(static_cast<Eigen::Index>(v));
        mean /= static_cast<double>(cell.size());
        double dev = 0.0;
        for (Index v : cell) dev = std::max(dev, std::abs(x(static_cast<Eigen::Index>(v)) - mean));
        out.push_back(dev);
    }
    return out;
}

Trajectory iterate(const CMatrix& m, const CVector& x0, Index steps, const std::optional<OrbitPartition>& cells,
                   bool normalize) {
    if (m.rows() != m.cols() || m.cols() != x0.size()) {
        throw DimensionMismatch("initial state length " + std::to_string(x0.size()) + " does not match matrix order " +
                                std::to_string(m.rows()));
    }
    Trajectory t;
    t.states.reserve(steps + 1);
    t.states.push_back(x0);
    t.scale.push_back(1.0);
    for (Index k = 0; k < steps; ++k) {
        CVector next = m * t.states.back();
        double s = 1.0;
        if (normalize) {
            const double sup = next.size() ? next.cwiseAbs().maxCoeff() : 0.0;
            if (sup > 0.0) {
                s = sup;
                next /= sup;
            }
        }
        t.states.push_back(std::move(next));
        t.scale.push_back(s);
    }
    if (cells) {
        for (const auto& x : t.states) t.sync_log.push_back(orbit_deviation(x, *cells));
    }
    return t;
}

SyncCheck check_orbit_synchronization(const Trajectory& t, const OrbitPartition& cells, double tol, double growth) {
    SyncCheck out;
    if (t.states.empty()) return out;
    const double g = std::max(1.0, growth);
    const double base = std::max(1.0, t.states.front().size() ? t.states.front().cwiseAbs().maxCoeff() : 0.0);
    double allowed = tol * base;
    for (Index k = 0; k < t.states.size(); ++k) {
        if (k > 0) {
            const double s = k < t.scale.size() ? t.scale[k] : 1.0;
            allowed = allowed * g / s;
        }
        const auto dev = k < t.sync_log.size() ? t.sync_log[k] : orbit_deviation(t.states[k], cells);
        const double worst = dev.empty() ? 0.0 : *std::max_element(dev.begin(), dev.end());
        out.worst_ratio = std::max(out.worst_ratio, allowed > 0.0 ? worst / allowed : 0.0);
        if (worst > allowed && !out.first_violation) {
            out.first_violation = k;
        }
    }
    return out;
}

}  // namespace hspec
