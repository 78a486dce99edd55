#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "hspec/matrix_builders.hpp"
#include "hspec/oracle.hpp"
#include "hspec/random_instances.hpp"
#include "hspec/unit_symmetry.hpp"

using namespace hspec;
using fixtures::v;

TEST_CASE("profile of figure 1 adjacency_r") {
    const auto h = fixtures::figure1();
    const auto units = compute_units(h);
    const auto a = build_matrix(h, MatrixKind::adjacency_r).entries;
    const auto p = profile_unit_compatibility(a, units);
    const Index u23 = units.vertex_to_unit[v(h, "2")];
    CHECK(p.d[u23] == Complex(0.0));
    REQUIRE(p.r[u23].has_value());
    CHECK(*p.r[u23] == Complex(3.0));
    CHECK_FALSE(p.r[units.vertex_to_unit[v(h, "1")]].has_value());
    // b(W) = d + (|W| - 1) r
    CHECK(p.b(static_cast<Eigen::Index>(u23), static_cast<Eigen::Index>(u23)) == Complex(3.0));
}

TEST_CASE("identity is unit-compatible") {
    const auto h = fixtures::figure1();
    const auto p = profile_unit_compatibility(CMatrix::Identity(10, 10), compute_units(h));
    for (const auto& d : p.d) CHECK(d == Complex(1.0));
    for (const auto& r : p.r)
        if (r) CHECK(*r == Complex(0.0));
}

TEST_CASE("violations name the unit and condition") {
    const auto h = fixtures::figure1();
    const auto units = compute_units(h);
    CMatrix a = build_matrix(h, MatrixKind::adjacency_r).entries;
    CMatrix diag = a;
    diag(v(h, "2"), v(h, "2")) = 1.0;
    try {
        profile_unit_compatibility(diag, units);
        FAIL("expected NotUnitCompatible");
    } catch (const NotUnitCompatible& e) {
        CHECK(e.condition() == "diagonal");
        CHECK(e.unit() == units.vertex_to_unit[v(h, "2")]);
    }
    CMatrix asym = a;
    asym(v(h, "2"), v(h, "3")) = 4.0;
    try {
        profile_unit_compatibility(asym, units);
        FAIL("expected NotUnitCompatible");
    } catch (const NotUnitCompatible& e) {
        CHECK(e.condition() == "symmetry");
    }
    CMatrix row = a;
    row(v(h, "2"), v(h, "10")) = 9.0;
    try {
        profile_unit_compatibility(row, units);
        FAIL("expected NotUnitCompatible");
    } catch (const NotUnitCompatible& e) {
        CHECK(e.condition() == "row");
    }
    CMatrix col = a;
    col(v(h, "10"), v(h, "3")) = 9.0;
    try {
        profile_unit_compatibility(col, units);
        FAIL("expected NotUnitCompatible");
    } catch (const NotUnitCompatible& e) {
        CHECK(e.condition() == "column");
    }
}

TEST_CASE("unit eigenvalues of figure 2") {
    const auto h = fixtures::figure2();
    const auto units = compute_units(h);
    const auto a = build_matrix(h, MatrixKind::adjacency_r).entries;
    const auto ue = unit_eigenvalues(a, units);
    REQUIRE(ue.size() == 8);
    const double lam[] = {-5, -3, -1, -1, -1, -2, -2, -2};
    const Index mult[] = {1, 1, 2, 1, 1, 2, 1, 1};
    for (Index i = 0; i < 8; ++i) {
        CHECK(ue[i].lambda == Complex(lam[i]));
        CHECK(ue[i].multiplicity == mult[i]);
        for (const auto& y : ue[i].basis) {
            CHECK(residual(a, ue[i].lambda, y) <= 1e-8);
            CHECK(std::abs(y.sum()) == 0.0);
            for (Index w = 0; w < h.order(); ++w)
                if (units.vertex_to_unit[w] != ue[i].unit) CHECK(y(static_cast<Eigen::Index>(w)) == Complex(0.0));
        }
    }
    const auto merged = merge_unit_eigenvalues(ue);
    REQUIRE(merged.size() == 4);
    CHECK(merged[0].lambda == Complex(-5.0));
    CHECK(merged[1].lambda == Complex(-3.0));
    CHECK(merged[2].multiplicity == 4);  // -2 over W6, W7, W8
    CHECK(merged[3].multiplicity == 4);  // -1 over W3, W4, W5
}

TEST_CASE("unit eigenvalues of figure 1") {
    const auto h = fixtures::figure1();
    const auto units = compute_units(h);
    const auto a = build_matrix(h, MatrixKind::adjacency_r).entries;
    const auto ue = unit_eigenvalues(a, units);
    REQUIRE(ue.size() == 3);
    for (const auto& e : ue) CHECK(e.lambda == Complex(-3.0));
    CHECK(ue[0].basis[0](v(h, "3")) == Complex(1.0));
    CHECK(ue[0].basis[0](v(h, "2")) == Complex(-1.0));
}

TEST_CASE("all singleton units") {
    const auto h = parse_hypergraph(
        R"({"vertices":["a","b","c"],"edges":[{"id":"x","members":["a","b"]},{"id":"y","members":["b","c"]}]})");
    const auto units = compute_units(h);
    const auto a = build_matrix(h, MatrixKind::adjacency_r).entries;
    CHECK(unit_eigenvalues(a, units).empty());
    CHECK(unit_quotient(a, units) == a);
}

TEST_CASE("unit quotient of figure 2") {
    const auto h = fixtures::figure2();
    const auto units = compute_units(h);
    const auto a = build_matrix(h, MatrixKind::adjacency_r).entries;
    const CMatrix q = unit_quotient(a, units);
    CHECK(q(0, 2) == Complex(3.0));
    CHECK(q(0, 3) == Complex(2.0));
    CHECK(unit_quotient(CMatrix::Zero(18, 18), units) == CMatrix::Zero(8, 8));

    // blown-up quotient eigenvectors are eigenvectors of A
    Eigen::ComplexEigenSolver<CMatrix> es(q);
    for (Eigen::Index i = 0; i < q.rows(); ++i) {
        const CVector y = blow_up(es.eigenvectors().col(i), units);
        CHECK(residual(a, es.eigenvalues()(i), y) <= 1e-8);
    }
}

TEST_CASE("blow up") {
    const auto h = fixtures::figure2();
    const auto units = compute_units(h);
    CHECK(blow_up(CVector::Ones(8), units) == CVector::Ones(18));
    CVector ind = CVector::Zero(8);
    ind(2) = 1.0;
    const CVector chi = blow_up(ind, units);
    for (Index w = 0; w < 18; ++w) CHECK(chi(static_cast<Eigen::Index>(w)) == Complex(units.vertex_to_unit[w] == 2 ? 1.0 : 0.0));
    CHECK_THROWS_AS(blow_up(CVector::Ones(7), units), DimensionMismatch);
}

TEST_CASE("figure 2 unit map") {
    const auto h = fixtures::figure2();
    const auto units = compute_units(h);
    const auto ua = validate_unit_automorphism(h, units, fixtures::figure2_unit_map(h, units));
    const std::vector<std::string> want = {"e3", "e1", "e2", "e5", "e4", "e7", "e6"};
    for (Index e = 0; e < 7; ++e) CHECK(h.edge(ua.induced_edge_map[e]).id == want[e]);
    CHECK_FALSE(ua.cardinality_preserving);
    try {
        lift_cardinality_preserving(ua, h, units);
        FAIL("expected NotCardinalityPreserving");
    } catch (const NotCardinalityPreserving& e) {
        CHECK(e.source_unit() == 2);
        CHECK(e.target_unit() == 3);
        CHECK(std::string(e.what()).find("{5,6,15}") != std::string::npos);
    }

    const auto a = build_matrix(h, MatrixKind::adjacency_r).entries;
    const auto rep = is_unit_automorphism_compatible(a, ua, units);
    CHECK_FALSE(rep.compatible);
    REQUIRE(rep.witness);
    CHECK(rep.witness->value == Complex(3.0));
    CHECK(rep.witness->image_value == Complex(2.0));
    CHECK_THROWS_AS(decompose_unit_automorphism(a, ua, units), IncompatibleMatrix);

    const auto n = build_matrix(h, MatrixKind::unit_normalized).entries;
    CHECK(is_unit_automorphism_compatible(n, ua, units).compatible);
    const auto d = decompose_unit_automorphism(n, ua, units);
    CHECK(d.eigenvalue_count() == 18);
    Index unit_count = 0;
    for (const auto& b : d.blocks)
        if (b.source.kind == BlockSource::Kind::unit) unit_count += b.eigenvalues.size();
    CHECK(unit_count == 10);
    CHECK(verify_decomposition(n, d, 1e-8).passed);
    // unit vectors are orthogonal to blown-up vectors
    for (const auto& p : d.lifted) {
        if (p.source.kind != BlockSource::Kind::unit) continue;
        for (const auto& q : d.lifted)
            if (q.source.kind != BlockSource::Kind::unit) CHECK(std::abs(p.vector.dot(q.vector)) <= 1e-12);
    }
}

TEST_CASE("identity unit map") {
    const auto h = fixtures::figure2();
    const auto units = compute_units(h);
    std::vector<Index> id(units.count());
    for (Index i = 0; i < id.size(); ++i) id[i] = i;
    const auto ua = validate_unit_automorphism(h, units, id);
    for (Index e = 0; e < h.size(); ++e) CHECK(ua.induced_edge_map[e] == e);
    CHECK(lift_cardinality_preserving(ua, h, units).perm.is_identity());
    const auto a = build_matrix(h, MatrixKind::adjacency_r).entries;
    CHECK(is_unit_automorphism_compatible(a, ua, units).compatible);
    const auto d = decompose_unit_automorphism(a, ua, units);
    CHECK(d.eigenvalue_count() == 18);
    CHECK(verify_decomposition(a, d, 1e-8).passed);
}

TEST_CASE("swapping W1 and W8 is not a unit automorphism") {
    const auto h = fixtures::figure2();
    const auto units = compute_units(h);
    std::vector<Index> map = {7, 1, 2, 3, 4, 5, 6, 0};
    CHECK_THROWS_AS(validate_unit_automorphism(h, units, map), NotAnAutomorphism);
    CHECK_THROWS_AS(validate_unit_automorphism(h, units, {0, 0, 1, 2, 3, 4, 5, 6}), InvalidArgument);
}

TEST_CASE("induced unit automorphism of the figure 1 rotation round trips") {
    const auto h = fixtures::figure1();
    const auto units = compute_units(h);
    const auto f = validate_automorphism(h, fixtures::figure1_rotation(h));
    const auto ua = induced_unit_automorphism(h, f, units);
    CHECK(ua.cardinality_preserving);
    const Index u23 = units.vertex_to_unit[v(h, "2")];
    const Index u56 = units.vertex_to_unit[v(h, "5")];
    const Index u89 = units.vertex_to_unit[v(h, "8")];
    CHECK(ua.unit_map[u23] == u56);
    CHECK(ua.unit_map[u56] == u89);
    CHECK(ua.unit_map[u89] == u23);
    const auto back = lift_cardinality_preserving(ua, h, units);
    CHECK(orbits(back.perm).orbits == orbits(f.perm).orbits);

    const auto id = induced_unit_automorphism(h, validate_automorphism(h, Permutation::identity(10)), units);
    for (Index i = 0; i < id.unit_map.size(); ++i) CHECK(id.unit_map[i] == i);
}

TEST_CASE("with singleton units the unit path matches the automorphism path") {
    const auto h = parse_hypergraph(R"({"vertices":["1","2","3","4"],"edges":[
        {"id":"a","members":["1","2"]},{"id":"b","members":["2","3"]},{"id":"c","members":["3","1"]},
        {"id":"d","members":["1","4"]},{"id":"e","members":["2","4"]},{"id":"g","members":["3","4"]}]})");
    const auto units = compute_units(h);
    REQUIRE(units.count() == 4);
    const auto f = validate_automorphism(h, Permutation({1, 2, 0, 3}));
    const auto ua = induced_unit_automorphism(h, f, units);
    for (auto kind : {MatrixKind::adjacency_r, MatrixKind::unit_normalized, MatrixKind::signless_q}) {
        const auto m = build_matrix(h, kind).entries;
        const auto a = decompose_unit_automorphism(m, ua, units);
        const auto b = decompose_automorphism(m, f.perm);
        CHECK(match_multisets(a.eigenvalues(), b.eigenvalues(), 1e-10).complete);
    }
}

TEST_CASE("symmetric kinds are unit-compatible on random hypergraphs") {
    std::mt19937_64 rng(21);
    for (int t = 0; t < 30; ++t) {
        const auto inst = random_instance(rng);
        const auto units = compute_units(inst.h);
        for (auto kind : all_matrix_kinds()) {
            if (!is_symmetric_kind(kind) && kind != MatrixKind::unit_normalized) continue;
            const auto m = build_matrix(inst.h, kind).entries;
            CHECK_NOTHROW(profile_unit_compatibility(m, units));
            Index total = units.count();
            for (const auto& e : unit_eigenvalues(m, units)) total += e.multiplicity;
            CHECK(total == inst.h.order());
        }
    }
}
