#pragma once

#include <optional>
#include <vector>

#include "hspec/common.hpp"
#include "hspec/hypergraph.hpp"

namespace hspec {

// A bijection on 0..n-1.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<Index> mapping);

    static Permutation identity(Index n);

    Index size() const { return map_.size(); }
    Index operator()(Index v) const { return map_[v]; }
    const std::vector<Index>& mapping() const { return map_; }

    Permutation inverse() const;
    // (this ∘ other)(v) = this(other(v))
    Permutation compose(const Permutation& other) const;
    Permutation power(long long k) const;
    bool is_identity() const;
    // Least m >= 1 with this^m = identity.
    Index order() const;
    // Disjoint cycles (length >= 1), each starting at its smallest element,
    // ordered by that element.
    std::vector<std::vector<Index>> cycles() const;

    friend bool operator==(const Permutation&, const Permutation&) = default;

private:
    std::vector<Index> map_;
};

struct Automorphism {
    Permutation perm;
    std::vector<Index> edge_map;  // edge index -> image edge index
    Index order = 1;
};

Automorphism validate_automorphism(const Hypergraph& h, const Permutation& perm);

// p_uv = 1 iff u maps to v, so (P x)(u) = x(f(u)).
CMatrix permutation_matrix(const Permutation& perm);

struct CompatibilityReport {
    bool compatible = true;
    double max_deviation = 0.0;
    // First (row-major) entry exceeding the tolerance.
    std::optional<CompatibilityWitness> witness;
};

inline constexpr double kDefaultCompatibilityTol = 1e-9;

// max_{u,v} |m_uv - m_{f(u)f(v)}| against `tol`.
CompatibilityReport is_compatible(const CMatrix& m, const Permutation& perm,
                                  double tol = kDefaultCompatibilityTol);
void require_compatible(const CMatrix& m, const Permutation& perm, double tol, const std::string& context);

// Largest entry modulus of M P_f - P_f M.
double check_commutation(const CMatrix& m, const Permutation& perm);

struct OrbitPartition {
    std::vector<std::vector<Index>> orbits;  // ascending members, ordered by smallest member
    std::vector<Index> vertex_to_orbit;

    Index count() const { return orbits.size(); }
};

OrbitPartition orbits(const Permutation& perm);
// Builds an OrbitPartition-shaped partition from arbitrary cells, validating
// that they cover 0..n-1 disjointly.
OrbitPartition make_partition(const std::vector<std::vector<Index>>& cells, Index n);

bool is_equitable(const CMatrix& m, const std::vector<std::vector<Index>>& cells, double tol = 1e-9);

// b_ij = sum_{w in cell j} m_uw for any u in cell i.
CMatrix orbit_quotient(const CMatrix& m, const OrbitPartition& partition, double tol = 1e-9);

// f permutes U_0 -> U_1 -> ... -> U_{n-1} -> U_0 positionally and fixes X.
struct Rotation {
    Index order = 0;
    std::vector<std::vector<Index>> components;
    std::vector<Index> invariant_set;
    Permutation underlying;

    const std::vector<Index>& base() const { return components.front(); }
    std::vector<Index> active_domain() const;
};

struct RotationDecomposition {
    std::vector<Rotation> factors;  // ascending order l_1 < l_2 < ...
    std::vector<Index> global_fixed;
};

// Builds a rotation from explicit components, checking the positional shift.
Rotation make_rotation(const Permutation& perm, std::vector<std::vector<Index>> components);

// Groups the cycles of f by length; each length class is one rotation whose
// U_0 holds the smallest element of each of its cycles.
RotationDecomposition rotation_decomposition(const Permutation& perm);

// Upper bound on the number of simple eigenvalues of a symmetric
// rotation-compatible matrix; no bound is given for non-symmetric matrices.
std::optional<Index> simple_eigenvalue_bound(const Rotation& rot, bool symmetric);

}  // namespace hspec
