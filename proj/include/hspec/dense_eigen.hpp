#pragma once

#include <vector>

#include "hspec/common.hpp"

// Small dense complex eigensolver used for the decomposition blocks.
// Eigenvalues come from a Hessenberg reduction followed by shifted QR
// (complex Schur form); eigenvectors are null vectors of (A - lambda I)
// from a one-sided Jacobi SVD, one orthonormal basis per eigenvalue cluster.
namespace hspec::linalg {

std::vector<Complex> schur_eigenvalues(const CMatrix& a);

struct SingularSystem {
    std::vector<double> values;  // unsorted, matches columns of `right`
    CMatrix right;               // right singular vectors
};

SingularSystem jacobi_svd(const CMatrix& a);

struct EigenCluster {
    std::vector<Complex> eigenvalues;  // members of the cluster (Schur values)
    std::vector<CVector> vectors;      // orthonormal basis of the numerical eigenspace
    std::vector<Complex> rayleigh;     // Rayleigh quotient of each vector
};

struct BlockEigensystem {
    std::vector<Complex> eigenvalues;  // all n, sorted by (re, im)
    std::vector<EigenCluster> clusters;
    Index defective = 0;  // algebraic minus geometric multiplicity, summed
};

struct EigenOptions {
    double cluster_tol = 1e-7;  // relative to max(1, ||A||_inf)
    double null_tol = 1e-6;     // relative to max(1, ||A||_inf)
};

BlockEigensystem eigensystem(const CMatrix& a, const EigenOptions& opts = {});

void sort_spectrum(std::vector<Complex>& values);

}  // namespace hspec::linalg
