#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "hspec/matrix_builders.hpp"
#include "hspec/random_instances.hpp"
#include "hspec/symmetry.hpp"

using namespace hspec;
using fixtures::v;

namespace {

const int kFigure1[10][10] = {
    {0, 1, 1, 0, 1, 1, 0, 1, 1, 0}, {1, 0, 3, 1, 1, 1, 0, 1, 1, 1}, {1, 3, 0, 1, 1, 1, 0, 1, 1, 1},
    {0, 1, 1, 0, 1, 1, 0, 0, 0, 0}, {1, 1, 1, 1, 0, 3, 1, 1, 1, 0}, {1, 1, 1, 1, 3, 0, 1, 1, 1, 0},
    {0, 0, 0, 0, 1, 1, 0, 1, 1, 0}, {1, 1, 1, 0, 1, 1, 1, 0, 3, 1}, {1, 1, 1, 0, 1, 1, 1, 3, 0, 1},
    {0, 1, 1, 0, 0, 0, 0, 1, 1, 0},
};

WeightFunctions unit_weights(const Hypergraph& h, bool adjacency_b_like) {
    WeightFunctions w;
    for (const auto& l : h.labels()) w.delta_v[l] = 1.0;
    for (const auto& e : h.edges()) {
        const double s = static_cast<double>(e.members.size());
        w.delta_e[e.id] = adjacency_b_like ? s * s / (s - 1.0) : 1.0;
    }
    return w;
}

}  // namespace

TEST_CASE("figure 1 adjacency_r entry for entry") {
    const auto h = fixtures::figure1();
    const auto m = build_matrix(h, MatrixKind::adjacency_r);
    REQUIRE(m.order() == 10);
    for (int r = 0; r < 10; ++r)
        for (int c = 0; c < 10; ++c) CHECK(m.entries(r, c) == Complex(kFigure1[r][c], 0.0));
}

TEST_CASE("kind names round trip") {
    for (auto k : all_matrix_kinds()) CHECK(parse_matrix_kind(to_string(k)) == k);
    CHECK(all_matrix_kinds().size() == 10);
    CHECK_THROWS_AS(parse_matrix_kind("bogus"), InvalidArgument);
}

TEST_CASE("no common edge gives zero") {
    const auto h = fixtures::figure1();
    const auto m = build_matrix(h, MatrixKind::adjacency_r);
    CHECK(m.entries(v(h, "4"), v(h, "10")) == Complex(0.0));
}

TEST_CASE("adjacency_b, laplacians and signless on figure 1") {
    const auto h = fixtures::figure1();
    const auto b = build_matrix(h, MatrixKind::adjacency_b);
    // 2,3 share f (size 3), i and j (size 5): 1/2 + 1/4 + 1/4
    CHECK(std::abs(b.entries(v(h, "2"), v(h, "3")) - 1.0) < 1e-15);
    CHECK(b.entries(0, 0) == Complex(0.0));
    const auto lb = build_matrix(h, MatrixKind::laplacian_b);
    CHECK(lb.entries(0, 0) == Complex(3.0));
    CHECK(row_sum_check(lb).ok());
    CHECK(row_sum_check(lb).applicable);
    const auto lr = build_matrix(h, MatrixKind::laplacian_r);
    CHECK(lr.entries(v(h, "2"), v(h, "3")) == Complex(-3.0));
    CHECK(row_sum_check(lr).ok());
    const auto q = build_matrix(h, MatrixKind::signless_q);
    CHECK(q.entries(v(h, "4"), v(h, "4")) == Complex(1.0));
    CHECK((q.entries - q.entries.transpose()).cwiseAbs().maxCoeff() == 0.0);
    CHECK_FALSE(row_sum_check(build_matrix(h, MatrixKind::adjacency_r)).applicable);
}

TEST_CASE("transition rows sum to one") {
    const auto h = parse_hypergraph(R"({"vertices":["a","b"],"edges":[{"id":"x","members":["a","b"]}]})");
    const auto p = build_matrix(h, MatrixKind::transition);
    CHECK(p.entries(0, 1) == Complex(1.0));
    CHECK(row_sum_check(p).ok());
    CHECK(row_sum_check(build_matrix(fixtures::figure1(), MatrixKind::transition)).ok());
}

TEST_CASE("singleton edges and empty stars are rejected where undefined") {
    const auto h = parse_hypergraph(
        R"({"vertices":["a","b","c"],"edges":[{"id":"x","members":["a"]},{"id":"y","members":["a","b"]}]})");
    CHECK_NOTHROW(build_matrix(h, MatrixKind::adjacency_r));
    CHECK_THROWS_AS(build_matrix(h, MatrixKind::adjacency_b), InvalidArgument);
    CHECK_THROWS_AS(build_matrix(h, MatrixKind::signless_q), InvalidArgument);
    const auto iso = parse_hypergraph(R"({"vertices":["a","b","c"],"edges":[{"id":"y","members":["a","b"]}]})");
    CHECK_THROWS_AS(build_matrix(iso, MatrixKind::transition), InvalidArgument);
}

TEST_CASE("weights are required exactly for general kinds") {
    const auto h = fixtures::figure1();
    CHECK_THROWS_AS(build_matrix(h, MatrixKind::general_adjacency), InvalidArgument);
    CHECK_THROWS_AS(build_matrix(h, MatrixKind::adjacency_r, unit_weights(h, false)), InvalidArgument);
    auto w = unit_weights(h, false);
    w.delta_v.erase("3");
    CHECK_THROWS_AS(build_matrix(h, MatrixKind::general_adjacency, w), InvalidArgument);
    w = unit_weights(h, false);
    w.delta_e["e"] = -1.0;
    CHECK_THROWS_AS(build_matrix(h, MatrixKind::general_adjacency, w), InvalidArgument);
    w = unit_weights(h, false);
    w.delta_e["zz"] = 1.0;
    CHECK_THROWS_AS(build_matrix(h, MatrixKind::general_adjacency, w), InvalidArgument);
}

TEST_CASE("general adjacency reproduces adjacency_b with the matching weights") {
    const auto h = fixtures::figure1();
    const auto g = build_matrix(h, MatrixKind::general_adjacency, unit_weights(h, true));
    const auto b = build_matrix(h, MatrixKind::adjacency_b);
    for (Eigen::Index r = 0; r < 10; ++r)
        for (Eigen::Index c = 0; c < 10; ++c)
            if (r != c) CHECK(std::abs(g.entries(r, c) - b.entries(r, c)) < 1e-14);
}

TEST_CASE("unit_normalized on figure 2") {
    const auto h = fixtures::figure2();
    const auto m = build_matrix(h, MatrixKind::unit_normalized);
    CHECK(std::abs(m.entries(v(h, "5"), v(h, "5")) - 1.0 / 3.0) < 1e-15);
    CHECK(m.entries(v(h, "5"), v(h, "5")) == m.entries(v(h, "15"), v(h, "15")));
    CHECK(std::abs(m.entries(v(h, "1"), v(h, "1")) - 5.0 / 2.0) < 1e-15);
}

TEST_CASE("symmetric kinds are symmetric and every kind is compatible with automorphisms") {
    std::mt19937_64 rng(5);
    for (int t = 0; t < 30; ++t) {
        const auto inst = random_instance(rng);
        WeightFunctions w;
        std::uniform_real_distribution<double> pos(0.5, 2.0);
        // f-invariant weights: constant on orbits
        const auto cells = orbits(inst.f);
        for (const auto& cell : cells.orbits) {
            const double x = pos(rng);
            for (Index u : cell) w.delta_v[inst.h.label(u)] = x;
        }
        const auto a = validate_automorphism(inst.h, inst.f);
        std::vector<bool> done(inst.h.size(), false);
        for (Index e = 0; e < inst.h.size(); ++e) {
            if (done[e]) continue;
            const double x = pos(rng);
            for (Index g = e; !done[g]; g = a.edge_map[g]) {
                done[g] = true;
                w.delta_e[inst.h.edge(g).id] = x;
            }
        }
        for (auto k : all_matrix_kinds()) {
            const auto m = build_matrix(inst.h, k, is_general_kind(k) ? std::optional(w) : std::nullopt);
            CHECK(is_compatible(m.entries, inst.f).compatible);
            if (is_symmetric_kind(k)) CHECK((m.entries - m.entries.transpose()).cwiseAbs().maxCoeff() == 0.0);
            CHECK(m.entries.imag().cwiseAbs().maxCoeff() == 0.0);
        }
    }
}
