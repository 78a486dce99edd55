#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hspec/common.hpp"
#include "hspec/spectral_engine.hpp"

// Ground truth from a general dense complex eigensolve that shares no code
// with the decomposition path.
namespace hspec {

struct MatchPair {
    Complex computed;
    std::optional<Complex> reference;  // empty when nothing was within tolerance
    double distance = 0.0;
};

struct MultisetMatch {
    bool complete = true;
    std::vector<MatchPair> pairs;
    std::vector<Complex> unused_reference;
};

// Greedy nearest neighbour, computed values taken in (re, im) order.
MultisetMatch match_multisets(std::vector<Complex> computed, const std::vector<Complex>& reference, double tol);

struct SpectrumReport {
    std::vector<Complex> eigenvalues;  // sorted by (re, im)
    std::vector<double> residuals;     // ||Mx - lx|| / max(1, ||x||)
    std::optional<MultisetMatch> match;
    double tolerance = 0.0;  // absolute, after scaling
    bool passed = true;
    std::vector<std::string> witnesses;
};

SpectrumReport dense_spectrum(const CMatrix& m);

// Multiset match of D's eigenvalues against dense_spectrum(M) and lifted
// residuals, both within tol * max(1, ||M||_inf).
SpectrumReport verify_decomposition(const CMatrix& m, const SpectralDecomposition& d, double tol = 1e-8);

double residual(const CMatrix& m, Complex lambda, const CVector& x);

}  // namespace hspec
