#include <doctest.h>

#include <random>

#include "hspec/dense_eigen.hpp"
#include "hspec/oracle.hpp"

using namespace hspec;

namespace {

CMatrix random_matrix(std::mt19937_64& rng, Eigen::Index n) {
    std::normal_distribution<double> g;
    CMatrix m(n, n);
    for (Eigen::Index r = 0; r < n; ++r)
        for (Eigen::Index c = 0; c < n; ++c) m(r, c) = Complex(g(rng), g(rng));
    return m;
}

}  // namespace

TEST_CASE("schur eigenvalues of small matrices") {
    CMatrix a(3, 3);
    a << 2, 5, 2, 5, 2, 2, 2, 2, 0;
    const auto vals = linalg::schur_eigenvalues(a);
    REQUIRE(vals.size() == 3);
    CHECK(std::abs(vals[0] - Complex(-3)) < 1e-12);
    CHECK(std::abs(vals[1] - Complex(-1)) < 1e-12);
    CHECK(std::abs(vals[2] - Complex(8)) < 1e-12);

    CHECK(linalg::schur_eigenvalues(CMatrix::Zero(0, 0)).empty());
    CHECK(linalg::schur_eigenvalues(CMatrix::Identity(1, 1))[0] == Complex(1.0));

    // rotation by 90 degrees: +-i
    CMatrix r(2, 2);
    r << 0, -1, 1, 0;
    const auto rv = linalg::schur_eigenvalues(r);
    CHECK(std::abs(rv[0] - Complex(0, -1)) < 1e-14);
    CHECK(std::abs(rv[1] - Complex(0, 1)) < 1e-14);

    CHECK_THROWS_AS(linalg::schur_eigenvalues(CMatrix::Zero(2, 3)), DimensionMismatch);
    CMatrix bad = CMatrix::Zero(2, 2);
    bad(0, 0) = std::numeric_limits<double>::quiet_NaN();
    CHECK_THROWS_AS(linalg::schur_eigenvalues(bad), InvalidArgument);
}

TEST_CASE("schur eigenvalues agree with the oracle on random matrices") {
    std::mt19937_64 rng(3);
    for (int t = 0; t < 40; ++t) {
        const CMatrix a = random_matrix(rng, 1 + t % 14);
        const auto ours = linalg::schur_eigenvalues(a);
        const auto ref = dense_spectrum(a).eigenvalues;
        CHECK(match_multisets(ours, ref, 1e-9 * std::max(1.0, inf_norm(a))).complete);
    }
}

TEST_CASE("jacobi svd gives an orthonormal right basis") {
    std::mt19937_64 rng(4);
    const CMatrix a = random_matrix(rng, 6);
    const auto svd = linalg::jacobi_svd(a);
    CHECK((svd.right.adjoint() * svd.right - CMatrix::Identity(6, 6)).cwiseAbs().maxCoeff() < 1e-12);
    // singular values match the Gram matrix spectrum
    std::vector<double> s = svd.values;
    std::sort(s.begin(), s.end());
    Eigen::SelfAdjointEigenSolver<CMatrix> es(a.adjoint() * a);
    for (int i = 0; i < 6; ++i) CHECK(std::abs(s[i] * s[i] - es.eigenvalues()(i)) < 1e-10);
}

TEST_CASE("eigensystem finds full eigenspaces") {
    // diag(2, 2, 5) conjugated by a fixed unitary
    CMatrix q(3, 3);
    q << 1, 1, 0, 1, -1, 0, 0, 0, std::sqrt(2.0);
    q /= std::sqrt(2.0);
    CMatrix d = CMatrix::Zero(3, 3);
    d(0, 0) = 2;
    d(1, 1) = 2;
    d(2, 2) = 5;
    const CMatrix a = q * d * q.adjoint();
    const auto sys = linalg::eigensystem(a);
    CHECK(sys.defective == 0);
    REQUIRE(sys.clusters.size() == 2);
    CHECK(sys.clusters[0].vectors.size() == 2);
    for (const auto& c : sys.clusters)
        for (std::size_t j = 0; j < c.vectors.size(); ++j) CHECK(residual(a, c.rayleigh[j], c.vectors[j]) < 1e-12);
}

TEST_CASE("jordan block is reported as defective") {
    CMatrix j(2, 2);
    j << 1, 1, 0, 1;
    const auto sys = linalg::eigensystem(j);
    CHECK(sys.eigenvalues.size() == 2);
    CHECK(sys.defective == 1);
    REQUIRE(sys.clusters.size() == 1);
    CHECK(sys.clusters[0].vectors.size() == 1);
}

TEST_CASE("zero matrix") {
    const auto sys = linalg::eigensystem(CMatrix::Zero(4, 4));
    CHECK(sys.defective == 0);
    for (const auto& z : sys.eigenvalues) CHECK(z == Complex(0.0));
    CHECK(sys.clusters[0].vectors.size() == 4);
}
