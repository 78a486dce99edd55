#pragma once

#include <optional>
#include <vector>

#include "hspec/common.hpp"
#include "hspec/symmetry.hpp"

namespace hspec {

struct Trajectory {
    std::vector<CVector> states;             // x_0 .. x_N
    std::vector<std::vector<double>> sync_log;  // per step, per cell: max |x(v) - mean|
    std::vector<double> scale;               // per step divisor applied when normalizing (1 otherwise)
};

// Max in-cell deviation from the cell mean, one entry per cell.
std::vector<double> orbit_deviation(const CVector& x, const OrbitPartition& cells);

// x_{k+1} = M x_k. With normalize, each new state is divided by its sup norm
// (when nonzero). sync_log is filled against `cells` when given.
Trajectory iterate(const CMatrix& m, const CVector& x0, Index steps,
                   const std::optional<OrbitPartition>& cells = std::nullopt, bool normalize = false);

struct SyncCheck {
    std::optional<Index> first_violation;
    double worst_ratio = 0.0;  // max deviation / allowed, over all steps
};

// Step k may deviate by tol * g^k * max(1, ||x_0||_inf), g = max(1, growth).
// Pass growth = ||M||_inf for raw iterates and 1 for normalized ones.
SyncCheck check_orbit_synchronization(const Trajectory& t, const OrbitPartition& cells, double tol,
                                      double growth = 1.0);

}  // namespace hspec
