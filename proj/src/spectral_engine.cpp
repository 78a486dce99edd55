#include "hspec/spectral_engine.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <thread>

namespace hspec {

namespace {

Eigen::Index ei(Index i) { return static_cast<Eigen::Index>(i); }

}  // namespace

RootOfUnity root_of_unity(Index n, Index k) {
    if (n < 1) {
        throw InvalidArgument("root of unity order must be at least 1");
    }
    if (k >= n) {
        throw InvalidArgument("root index out of range");
    }
    RootOfUnity r{n, k, {}};
    // Reduce to the first octant-free quadrant cases so that 1, i, -1, -i
    // come out exact.
    if (4 * k % n == 0) {
        static constexpr Complex kQuarter[4] = {{1.0, 0.0}, {0.0, 1.0}, {-1.0, 0.0}, {0.0, -1.0}};
        r.value = kQuarter[4 * k / n];
    } else {
        const double angle = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n);
        r.value = {std::cos(angle), std::sin(angle)};
    }
    return r;
}

std::vector<RootOfUnity> roots_of_unity(Index n) {
    if (n < 1) {
        throw InvalidArgument("root of unity order must be at least 1");
    }
    std::vector<RootOfUnity> out;
    for (Index k = 0; k < n; ++k) out.push_back(root_of_unity(n, k));
    return out;
}

CMatrix rotation_matrix(const CMatrix& m, const Rotation& rot, const RootOfUnity& omega, double tol) {
    if (omega.n != rot.order) {
        throw InvalidArgument("root of unity order " + std::to_string(omega.n) + " does not match rotation order " +
                              std::to_string(rot.order));
    }
    require_compatible(m, rot.underlying, tol, "matrix is not compatible with the rotation");
    const auto& base = rot.base();
    const Index width = base.size();
    CMatrix r = CMatrix::Zero(ei(width), ei(width));
    for (Index i = 0; i < rot.order; ++i) {
        // omega^i from the exact angle of k*i mod n.
        const Complex w = root_of_unity(rot.order, (omega.k * i) % rot.order).value;
        const auto& shifted = rot.components[i];  // shifted[b] = f^i(base[b])
        for (Index a = 0; a < width; ++a) {
            for (Index b = 0; b < width; ++b) {
                r(ei(a), ei(b)) += w * m(ei(base[a]), ei(shifted[b]));
            }
        }
    }
    return r;
}

CVector lift_rotation_vector(const CVector& x, const Rotation& rot, const RootOfUnity& omega) {
    if (static_cast<Index>(x.size()) != rot.base().size()) {
        throw DimensionMismatch("vector length does not match |U_0|");
    }
    if (omega.n != rot.order) {
        throw InvalidArgument("root of unity order does not match rotation order");
    }
    CVector out = CVector::Zero(ei(rot.underlying.size()));
    for (Index i = 0; i < rot.order; ++i) {
        const Complex w = root_of_unity(rot.order, (omega.k * i) % rot.order).value;
        for (Index b = 0; b < rot.components[i].size(); ++b) {
            out(ei(rot.components[i][b])) = w * x(ei(b));
        }
    }
    return out;
}

CVector lift_orbit_vector(const CVector& y, const OrbitPartition& partition) {
    if (static_cast<Index>(y.size()) != partition.count()) {
        throw DimensionMismatch("vector length does not match the number of cells");
    }
    CVector out(ei(partition.vertex_to_orbit.size()));
    for (Index v = 0; v < partition.vertex_to_orbit.size(); ++v) {
        out(ei(v)) = y(ei(partition.vertex_to_orbit[v]));
    }
    return out;
}

std::string BlockSource::tag() const {
    switch (kind) {
        case Kind::rotation:
            return "rotation[" + std::to_string(factor) + "]^omega(" + std::to_string(omega_k) + "/" +
                   std::to_string(order) + ")";
        case Kind::orbit_quotient:
            return "orbit_quotient";
        case Kind::unit:
            return "unit[" + std::to_string(factor) + "]";
    }
    return "unknown";
}

std::vector<Complex> SpectralDecomposition::eigenvalues() const {
    std::vector<Complex> out;
    for (const auto& b : blocks) out.insert(out.end(), b.eigenvalues.begin(), b.eigenvalues.end());
    linalg::sort_spectrum(out);
    return out;
}

Index SpectralDecomposition::eigenvalue_count() const {
    Index n = 0;
    for (const auto& b : blocks) n += b.eigenvalues.size();
    return n;
}

Index SpectralDecomposition::defective() const {
    Index n = 0;
    for (const auto& b : blocks) n += b.defective;
    return n;
}

unsigned block_threads_from_env() {
    if (const char* env = std::getenv("HSPEC_THREADS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && v > 0) {
            return static_cast<unsigned>(v);
        }
    }
    return 1;
}

namespace {

// Solves every block; blocks are independent so this may fan out, but the
// result order is fixed by the input order.
void solve_blocks(std::vector<SpectralBlock>& blocks, const EngineOptions& opts,
                  std::vector<linalg::BlockEigensystem>& systems) {
    systems.assign(blocks.size(), {});
    const unsigned cap = opts.threads ? opts.threads : block_threads_from_env();
    const unsigned workers = std::max(1u, std::min<unsigned>(cap, static_cast<unsigned>(blocks.size())));
    auto work = [&](std::size_t i) { systems[i] = linalg::eigensystem(blocks[i].matrix, opts.eigen); };
    if (workers == 1) {
        for (std::size_t i = 0; i < blocks.size(); ++i) work(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < workers; ++t) {
        pool.emplace_back([&, t] {
            try {
                for (std::size_t i = next++; i < blocks.size(); i = next++) work(i);
            } catch (...) {
                errors[t] = std::current_exception();
            }
        });
    }
    for (auto& th : pool) th.join();
    for (auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
}

SpectralDecomposition assemble(const CMatrix& m, const std::vector<Rotation>& factors,
                               const Permutation& whole, const EngineOptions& opts) {
    SpectralDecomposition d;
    d.dimension = static_cast<Index>(m.rows());

    for (Index fi = 0; fi < factors.size(); ++fi) {
        const Rotation& rot = factors[fi];
        for (Index k = 1; k < rot.order; ++k) {
            SpectralBlock b;
            b.source = {BlockSource::Kind::rotation, fi, k, rot.order};
            b.matrix = rotation_matrix(m, rot, root_of_unity(rot.order, k), opts.compat_tol);
            d.blocks.push_back(std::move(b));
        }
    }
    const OrbitPartition orbit_cells = orbits(whole);
    {
        SpectralBlock b;
        b.source = {BlockSource::Kind::orbit_quotient, 0, 0, 0};
        b.matrix = orbit_quotient(m, orbit_cells, opts.compat_tol);
        d.blocks.push_back(std::move(b));
    }

    Index count = orbit_cells.count();
    for (const auto& rot : factors) count += (rot.order - 1) * rot.base().size();
    if (count != d.dimension) {
        throw Error("block sizes sum to " + std::to_string(count) + " instead of " + std::to_string(d.dimension));
    }

    std::vector<linalg::BlockEigensystem> systems;
    solve_blocks(d.blocks, opts, systems);

    for (std::size_t bi = 0; bi < d.blocks.size(); ++bi) {
        SpectralBlock& b = d.blocks[bi];
        const auto& sys = systems[bi];
        b.eigenvalues = sys.eigenvalues;
        b.defective = sys.defective;
        for (const auto& cluster : sys.clusters) {
            for (std::size_t j = 0; j < cluster.vectors.size(); ++j) {
                b.eigenpairs.push_back({cluster.rayleigh[j], cluster.vectors[j]});
                CVector full;
                if (b.source.kind == BlockSource::Kind::rotation) {
                    const Rotation& rot = factors[b.source.factor];
                    full = lift_rotation_vector(cluster.vectors[j], rot, root_of_unity(rot.order, b.source.omega_k));
                } else {
                    full = lift_orbit_vector(cluster.vectors[j], orbit_cells);
                }
                full.normalize();
                d.lifted.push_back({cluster.rayleigh[j], std::move(full), b.source});
            }
        }
    }
    return d;
}

}  // namespace

SpectralDecomposition decompose_rotation(const CMatrix& m, const Rotation& rot, const EngineOptions& opts) {
    require_compatible(m, rot.underlying, opts.compat_tol, "matrix is not compatible with the rotation");
    return assemble(m, {rot}, rot.underlying, opts);
}

SpectralDecomposition decompose_automorphism(const CMatrix& m, const Permutation& f, const EngineOptions& opts) {
    require_compatible(m, f, opts.compat_tol, "matrix is not compatible with the automorphism");
    RotationDecomposition dec = rotation_decomposition(f);
    for (const auto& rot : dec.factors) {
        require_compatible(m, rot.underlying, opts.compat_tol,
                           "matrix is not compatible with the order-" + std::to_string(rot.order) +
                               " factor rotation (cycle lengths sharing a common divisor)");
    }
    return assemble(m, dec.factors, f, opts);
}

SpectralRadii spectral_radius_via_quotient(const CMatrix& m, const Permutation& f, double tol) {
    require_compatible(m, f, tol, "matrix is not compatible with the automorphism");
    auto radius = [](const std::vector<Complex>& values) {
        double r = 0.0;
        for (const auto& v : values) r = std::max(r, std::abs(v));
        return r;
    };
    const CMatrix q = orbit_quotient(m, orbits(f), tol);
    return {radius(linalg::schur_eigenvalues(m)), radius(linalg::schur_eigenvalues(q))};
}

}  // namespace hspec
