#include <doctest.h>

#include <random>

#include "hspec/matrix_builders.hpp"
#include "hspec/oracle.hpp"
#include "hspec/random_instances.hpp"
#include "hspec/spectral_engine.hpp"
#include "hspec/unit_symmetry.hpp"

using namespace hspec;

TEST_CASE("random automorphisms are valid and orbit-averaged matrices compatible") {
    std::mt19937_64 rng(101);
    for (int t = 0; t < 60; ++t) {
        const auto inst = random_instance(rng);
        CHECK(inst.h.order() <= 14);
        const auto a = validate_automorphism(inst.h, inst.f);
        CHECK(inst.f.power(static_cast<long long>(a.order)).is_identity());
        const CMatrix m = random_compatible_matrix(rng, inst.f, t % 3 == 0);
        CHECK(is_compatible(m, inst.f).max_deviation <= 1e-12);
        CHECK(check_commutation(m, inst.f) <= 1e-12);
        CHECK(is_equitable(m, orbits(inst.f).orbits));
        // averaging is idempotent
        CHECK((orbit_average(m, inst.f) - m).cwiseAbs().maxCoeff() <= 1e-12);
    }
}

TEST_CASE("decomposition matches the dense spectrum") {
    std::mt19937_64 rng(202);
    for (int t = 0; t < 60; ++t) {
        const auto inst = random_instance(rng);
        const CMatrix m = random_compatible_matrix(rng, inst.f, t % 2 == 0);
        const auto d = decompose_automorphism(m, inst.f);
        CHECK(d.eigenvalue_count() == inst.h.order());
        const auto rep = verify_decomposition(m, d, 1e-8);
        CHECK_MESSAGE(rep.passed, (rep.witnesses.empty() ? std::string() : rep.witnesses.front()));
        // |M| is compatible too and nonnegative
        const CMatrix pos = m.cwiseAbs().cast<Complex>();
        const auto radii = spectral_radius_via_quotient(pos, inst.f);
        CHECK(std::abs(radii.full - radii.quotient) <= 1e-8 * std::max(1.0, inf_norm(pos)));
    }
}

TEST_CASE("hypergraph matrices decompose under their automorphisms") {
    std::mt19937_64 rng(303);
    for (int t = 0; t < 30; ++t) {
        const auto inst = random_instance(rng);
        for (auto kind : {MatrixKind::adjacency_r, MatrixKind::laplacian_r, MatrixKind::transition}) {
            CMatrix m;
            try {
                m = build_matrix(inst.h, kind).entries;
            } catch (const InvalidArgument&) {
                continue;  // e.g. transition with an isolated vertex
            }
            const auto d = decompose_automorphism(m, inst.f);
            CHECK(verify_decomposition(m, d, 1e-8).passed);
        }
    }
}

TEST_CASE("unit decomposition of hypergraph matrices under induced unit maps") {
    std::mt19937_64 rng(404);
    int checked = 0;
    for (int t = 0; t < 40; ++t) {
        const auto inst = random_instance(rng);
        const auto units = compute_units(inst.h);
        const auto ua = induced_unit_automorphism(inst.h, validate_automorphism(inst.h, inst.f), units);
        const CMatrix m = build_matrix(inst.h, MatrixKind::adjacency_r).entries;
        try {
            const auto d = decompose_unit_automorphism(m, ua, units);
            CHECK(verify_decomposition(m, d, 1e-8).passed);
            ++checked;
        } catch (const IncompatibleMatrix&) {
            // unit cycle lengths with a common divisor; covered elsewhere
        }
    }
    CHECK(checked > 20);
}
