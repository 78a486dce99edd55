#pragma once

#include <random>
#include <vector>

#include "hspec/common.hpp"
#include "hspec/hypergraph.hpp"
#include "hspec/symmetry.hpp"

// Seeded generators for property tests and the selftest command.
namespace hspec {

struct RandomInstance {
    Hypergraph h;
    Permutation f;
    std::vector<Index> cycle_type;  // lengths > 1
    Index fixed_points = 0;
};

// Cycle types with pairwise coprime distinct lengths, at most 14 vertices.
const std::vector<std::vector<Index>>& coprime_cycle_types();

// Hypergraph on cycle lengths + fixed points vertices whose edge set is
// closed under a permutation of the given cycle type. Every vertex is covered
// and no edge is a singleton.
RandomInstance random_symmetric_hypergraph(std::mt19937_64& rng, const std::vector<Index>& cycle_type,
                                           Index fixed_points);

// Picks a cycle type from the pool and up to 14 - |active| fixed points.
RandomInstance random_instance(std::mt19937_64& rng);

// m_uv = (1/L) sum_i r_{f^i(u) f^i(v)} over the cyclic group of f.
CMatrix orbit_average(const CMatrix& r, const Permutation& f);

// Orbit-averaged Gaussian matrix; complex general or real symmetric.
CMatrix random_compatible_matrix(std::mt19937_64& rng, const Permutation& f, bool real_symmetric);

}  // namespace hspec
