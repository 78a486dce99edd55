#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hspec/common.hpp"
#include "hspec/dense_eigen.hpp"
#include "hspec/symmetry.hpp"

namespace hspec {

struct RootOfUnity {
    Index n = 1;
    Index k = 0;
    Complex value{1.0, 0.0};
};

// exp(2*pi*i*k/n) for k = 0..n-1, each from its exact angle.
std::vector<RootOfUnity> roots_of_unity(Index n);
RootOfUnity root_of_unity(Index n, Index k);

// r_uv = sum_i omega^i m_{u f^i(v)} for u, v in U_0.
CMatrix rotation_matrix(const CMatrix& m, const Rotation& rot, const RootOfUnity& omega,
                        double tol = kDefaultCompatibilityTol);

// x_omega(v) = omega^i x(f^{-i}(v)) on U_i, zero on the invariant set.
CVector lift_rotation_vector(const CVector& x, const Rotation& rot, const RootOfUnity& omega);

// Constant on each cell with the cell's value.
CVector lift_orbit_vector(const CVector& y, const OrbitPartition& partition);

struct BlockSource {
    enum class Kind { rotation, orbit_quotient, unit };
    Kind kind = Kind::orbit_quotient;
    Index factor = 0;   // rotation: factor index; unit: unit index
    Index omega_k = 0;  // rotation: root index k of exp(2*pi*i*k/order)
    Index order = 0;    // rotation: factor order

    std::string tag() const;
};

struct Eigenpair {
    Complex lambda;
    CVector vector;
};

struct SpectralBlock {
    BlockSource source;
    CMatrix matrix;
    std::vector<Complex> eigenvalues;  // sorted by (re, im)
    std::vector<Eigenpair> eigenpairs; // block-level vectors
    Index defective = 0;               // eigenvalues left without a vector
};

struct LiftedPair {
    Complex lambda;
    CVector vector;  // full dimension
    BlockSource source;
};

struct SpectralDecomposition {
    Index dimension = 0;
    std::vector<SpectralBlock> blocks;
    std::vector<LiftedPair> lifted;

    // Union of block eigenvalues, sorted by (re, im).
    std::vector<Complex> eigenvalues() const;
    Index eigenvalue_count() const;
    Index defective() const;
};

struct EngineOptions {
    double compat_tol = kDefaultCompatibilityTol;
    linalg::EigenOptions eigen{};
    // 0 reads HSPEC_THREADS (default 1).
    unsigned threads = 0;
};

SpectralDecomposition decompose_rotation(const CMatrix& m, const Rotation& rot, const EngineOptions& opts = {});

// Requires M to be compatible with f and with each factor rotation of f;
// the latter is automatic when the cycle lengths of f are pairwise coprime.
SpectralDecomposition decompose_automorphism(const CMatrix& m, const Permutation& f,
                                             const EngineOptions& opts = {});

struct SpectralRadii {
    double full = 0.0;
    double quotient = 0.0;
};

// The two radii coincide when M is entrywise nonnegative; a signed M can
// have eigenvalues outside the quotient's radius.
SpectralRadii spectral_radius_via_quotient(const CMatrix& m, const Permutation& f,
                                           double tol = kDefaultCompatibilityTol);

unsigned block_threads_from_env();

}  // namespace hspec
