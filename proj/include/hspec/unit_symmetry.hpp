#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hspec/common.hpp"
#include "hspec/hypergraph.hpp"
#include "hspec/spectral_engine.hpp"
#include "hspec/symmetry.hpp"

namespace hspec {

struct UnitCompatibleProfile {
    std::vector<Complex> d;                 // common diagonal per unit
    std::vector<std::optional<Complex>> r;  // common in-unit off-diagonal; absent for singletons
    CMatrix s;  // units x vertices, s(i, w) = m_uw for w outside unit i (zero inside)
    CMatrix b;  // units x units, the unit quotient [M/U(H)]
};

// Throws NotUnitCompatible naming the unit and the failed condition
// ("diagonal", "symmetry", "row", "column").
UnitCompatibleProfile profile_unit_compatibility(const CMatrix& m, const UnitPartition& units,
                                                 double tol = kDefaultCompatibilityTol);

struct UnitEigenpair {
    Index unit = 0;
    Complex lambda;                // d - r
    Index multiplicity = 0;        // |W| - 1
    std::vector<CVector> basis;    // chi_{v_i} - chi_{v_0}, v_0 the smallest member
};

std::vector<UnitEigenpair> unit_eigenvalues(const CMatrix& m, const UnitPartition& units,
                                            double tol = kDefaultCompatibilityTol);

struct MergedUnitEigenvalue {
    Complex lambda;
    Index multiplicity = 0;
    std::vector<Index> units;
};

// Groups entries whose eigenvalues agree within merge_tol; report only.
std::vector<MergedUnitEigenvalue> merge_unit_eigenvalues(const std::vector<UnitEigenpair>& pairs,
                                                         double merge_tol = 1e-9);

CMatrix unit_quotient(const CMatrix& m, const UnitPartition& units, double tol = kDefaultCompatibilityTol);

CVector blow_up(const CVector& y, const UnitPartition& units);

struct UnitAutomorphism {
    std::vector<Index> unit_map;          // unit index -> image unit index
    std::vector<Index> induced_edge_map;  // edge index -> image edge index
    bool cardinality_preserving = true;
};

UnitAutomorphism validate_unit_automorphism(const Hypergraph& h, const UnitPartition& units,
                                            const std::vector<Index>& unit_map);

UnitAutomorphism induced_unit_automorphism(const Hypergraph& h, const Automorphism& f,
                                           const UnitPartition& units);

Automorphism lift_cardinality_preserving(const UnitAutomorphism& ua, const Hypergraph& h,
                                         const UnitPartition& units);

// Compatibility of [M/U(H)] with the unit map; witness indices are units.
CompatibilityReport is_unit_automorphism_compatible(const CMatrix& m, const UnitAutomorphism& ua,
                                                    const UnitPartition& units,
                                                    double tol = kDefaultCompatibilityTol);

// Unit blocks first (one per unit of size >= 2), then the decomposition of
// [M/U(H)] under the unit map with its vectors blown up.
SpectralDecomposition decompose_unit_automorphism(const CMatrix& m, const UnitAutomorphism& ua,
                                                  const UnitPartition& units, const EngineOptions& opts = {});

}  // namespace hspec
