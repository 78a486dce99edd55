#include "hspec/oracle.hpp"

#include <algorithm>
#include <cstdio>
#include <limits>

#include <Eigen/Eigenvalues>

namespace hspec {

namespace {

std::string format_complex(Complex z) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "%.17g%+.17gi", z.real(), z.imag());
    return buf;
}

bool spectrum_less(const Complex& x, const Complex& y) {
    if (x.real() != y.real()) return x.real() < y.real();
    return x.imag() < y.imag();
}

}  // namespace

double residual(const CMatrix& m, Complex lambda, const CVector& x) {
    return (m * x - lambda * x).norm() / std::max(1.0, x.norm());
}

MultisetMatch match_multisets(std::vector<Complex> computed, const std::vector<Complex>& reference, double tol) {
    std::sort(computed.begin(), computed.end(), spectrum_less);
    MultisetMatch out;
    std::vector<bool> used(reference.size(), false);
    for (const auto& c : computed) {
        std::size_t best = reference.size();
        double best_d = std::numeric_limits<double>::infinity();
        for (std::size_t j = 0; j < reference.size(); ++j) {
            if (used[j]) continue;
            const double d = std::abs(c - reference[j]);
            if (d < best_d) {
                best_d = d;
                best = j;
            }
        }
        MatchPair p{c, std::nullopt, best_d};
        if (best < reference.size() && best_d <= tol) {
            used[best] = true;
            p.reference = reference[best];
        } else {
            out.complete = false;
        }
        out.pairs.push_back(p);
    }
    for (std::size_t j = 0; j < reference.size(); ++j) {
        if (!used[j]) {
            out.unused_reference.push_back(reference[j]);
            out.complete = false;
        }
    }
    return out;
}

SpectrumReport dense_spectrum(const CMatrix& m) {
    if (m.rows() != m.cols()) {
        throw DimensionMismatch("dense spectrum requires a square matrix");
    }
    if (!m.allFinite()) {
        throw InvalidArgument("matrix has non-finite entries");
    }
    SpectrumReport r;
    if (m.rows() == 0) return r;
    Eigen::ComplexEigenSolver<CMatrix> solver(m, true);
    if (solver.info() != Eigen::Success) {
        throw Error("dense eigensolver did not converge");
    }
    std::vector<std::pair<Complex, CVector>> pairs;
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        pairs.emplace_back(solver.eigenvalues()(i), solver.eigenvectors().col(i));
    }
    std::stable_sort(pairs.begin(), pairs.end(),
                     [](const auto& x, const auto& y) { return spectrum_less(x.first, y.first); });
    for (const auto& [lambda, x] : pairs) {
        r.eigenvalues.push_back(lambda);
        r.residuals.push_back(residual(m, lambda, x));
    }
    return r;
}

SpectrumReport verify_decomposition(const CMatrix& m, const SpectralDecomposition& d, double tol) {
    SpectrumReport r;
    r.tolerance = tol * std::max(1.0, inf_norm(m));
    const auto dense = dense_spectrum(m);
    r.eigenvalues = d.eigenvalues();
    if (r.eigenvalues.size() != static_cast<std::size_t>(m.rows())) {
        r.passed = false;
        r.witnesses.push_back("decomposition has " + std::to_string(r.eigenvalues.size()) + " eigenvalues, matrix has " +
                              std::to_string(m.rows()));
    }
    r.match = match_multisets(r.eigenvalues, dense.eigenvalues, r.tolerance);
    for (const auto& p : r.match->pairs) {
        if (!p.reference) {
            r.witnesses.push_back("unmatched eigenvalue " + format_complex(p.computed) + " (nearest at distance " +
                                  std::to_string(p.distance) + ")");
        }
    }
    for (const auto& z : r.match->unused_reference) {
        r.witnesses.push_back("dense eigenvalue " + format_complex(z) + " has no partner");
    }
    if (!r.match->complete) r.passed = false;
    for (const auto& lp : d.lifted) {
        const double res = residual(m, lp.lambda, lp.vector);
        r.residuals.push_back(res);
        if (!(res <= r.tolerance)) {
            r.passed = false;
            r.witnesses.push_back("lifted pair " + format_complex(lp.lambda) + " from " + lp.source.tag() +
                                  " has residual " + std::to_string(res));
        }
    }
    return r;
}

}  // namespace hspec
