#include "hspec/dense_eigen.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace hspec::linalg {

namespace {

using Eigen::Index;  // signed, like Eigen itself

constexpr double kEps = std::numeric_limits<double>::epsilon();

void to_hessenberg(CMatrix& h) {
    const Index n = h.rows();
    for (Index k = 0; k + 2 < n; ++k) {
        CVector x = h.block(k + 1, k, n - k - 1, 1);
        const double norm = x.norm();
        if (norm == 0.0) {
            continue;
        }
        const Complex phase = std::abs(x(0)) == 0.0 ? Complex(1.0) : x(0) / std::abs(x(0));
        const Complex alpha = -phase * norm;
        CVector v = x;
        v(0) -= alpha;
        const double vn = v.norm();
        if (vn == 0.0) {
            continue;
        }
        v /= vn;
        // H <- (I - 2 v v^H) H (I - 2 v v^H) on the trailing rows/columns.
        auto rows = h.block(k + 1, 0, n - k - 1, n);
        rows -= 2.0 * v * (v.adjoint() * rows);
        auto cols = h.block(0, k + 1, n, n - k - 1);
        cols -= 2.0 * (cols * v) * v.adjoint();
        for (Index i = k + 2; i < n; ++i) {
            h(i, k) = 0.0;
        }
    }
}

struct Givens {
    double c;
    Complex s;
};

Givens make_givens(Complex a, Complex b) {
    const double r = std::hypot(std::abs(a), std::abs(b));
    if (r == 0.0) {
        return {1.0, 0.0};
    }
    if (std::abs(a) == 0.0) {
        return {0.0, 1.0};
    }
    const double c = std::abs(a) / r;
    const Complex s = (a / std::abs(a)) * std::conj(b) / r;
    return {c, s};
}

Complex wilkinson_shift(const CMatrix& h, Index iu) {
    const Complex a = h(iu - 1, iu - 1);
    const Complex b = h(iu - 1, iu);
    const Complex c = h(iu, iu - 1);
    const Complex d = h(iu, iu);
    const Complex half_tr = 0.5 * (a + d);
    const Complex disc = std::sqrt(0.25 * (a - d) * (a - d) + b * c);
    const Complex l1 = half_tr + disc;
    const Complex l2 = half_tr - disc;
    return std::abs(l1 - d) <= std::abs(l2 - d) ? l1 : l2;
}

}  // namespace

std::vector<Complex> schur_eigenvalues(const CMatrix& a) {
    if (a.rows() != a.cols()) {
        throw DimensionMismatch("eigenvalues require a square matrix");
    }
    if (!a.allFinite()) {
        throw InvalidArgument("matrix has non-finite entries");
    }
    const Index n = a.rows();
    if (n == 0) return {};
    CMatrix h = a;
    to_hessenberg(h);
    const double scale = std::max(h.cwiseAbs().maxCoeff(), std::numeric_limits<double>::min());

    Index iu = n - 1;
    int iter = 0;
    int total = 0;
    const int max_total = 100 * static_cast<int>(std::max<Index>(n, 1));
    while (iu > 0) {
        Index l = iu;
        while (l > 0) {
            const double sub = std::abs(h(l, l - 1));
            const double diag = std::abs(h(l - 1, l - 1)) + std::abs(h(l, l));
            if (sub <= kEps * (diag == 0.0 ? scale : diag)) {
                h(l, l - 1) = 0.0;
                break;
            }
            --l;
        }
        if (l == iu) {
            --iu;
            iter = 0;
            continue;
        }
        ++iter;
        if (++total > max_total) {
            throw Error("complex QR iteration did not converge");
        }
        Complex shift;
        if (iter % 10 == 0) {
            shift = std::abs(h(iu, iu - 1).real()) + (iu >= 2 ? std::abs(h(iu - 1, iu - 2).real()) : 0.0);
        } else {
            shift = wilkinson_shift(h, iu);
        }

        for (Index k = l; k <= iu; ++k) h(k, k) -= shift;
        std::vector<Givens> rot;
        rot.reserve(static_cast<std::size_t>(iu - l));
        for (Index k = l; k < iu; ++k) {
            Givens g = make_givens(h(k, k), h(k + 1, k));
            rot.push_back(g);
            for (Index j = k; j <= iu; ++j) {
                const Complex x = h(k, j);
                const Complex y = h(k + 1, j);
                h(k, j) = g.c * x + g.s * y;
                h(k + 1, j) = -std::conj(g.s) * x + g.c * y;
            }
            h(k + 1, k) = 0.0;
        }
        for (Index k = l; k < iu; ++k) {
            const Givens& g = rot[static_cast<std::size_t>(k - l)];
            const Index last = std::min(k + 2, iu);
            for (Index i = l; i <= last; ++i) {
                const Complex x = h(i, k);
                const Complex y = h(i, k + 1);
                h(i, k) = g.c * x + std::conj(g.s) * y;
                h(i, k + 1) = -g.s * x + g.c * y;
            }
        }
        for (Index k = l; k <= iu; ++k) h(k, k) += shift;
    }

    std::vector<Complex> values(static_cast<std::size_t>(n));
    for (Index i = 0; i < n; ++i) values[static_cast<std::size_t>(i)] = h(i, i);
    sort_spectrum(values);
    return values;
}

SingularSystem jacobi_svd(const CMatrix& a) {
    CMatrix u = a;
    const Index n = a.cols();
    CMatrix v = CMatrix::Identity(n, n);
    for (int sweep = 0; sweep < 80; ++sweep) {
        bool rotated = false;
        for (Index p = 0; p + 1 < n; ++p) {
            for (Index q = p + 1; q < n; ++q) {
                const double alpha = u.col(p).squaredNorm();
                const double beta = u.col(q).squaredNorm();
                const Complex gamma = u.col(p).dot(u.col(q));  // a_p^H a_q
                const double g = std::abs(gamma);
                if (g == 0.0 || g <= kEps * std::sqrt(alpha * beta)) {
                    continue;
                }
                rotated = true;
                const Complex phase = std::conj(gamma / g);  // a_p^H (a_q * phase) = |gamma|
                const double zeta = (beta - alpha) / (2.0 * g);
                const double t = std::copysign(1.0, zeta) / (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = c * t;
                CVector up = u.col(p);
                CVector uq = u.col(q) * phase;
                u.col(p) = c * up - s * uq;
                u.col(q) = s * up + c * uq;
                CVector vp = v.col(p);
                CVector vq = v.col(q) * phase;
                v.col(p) = c * vp - s * vq;
                v.col(q) = s * vp + c * vq;
            }
        }
        if (!rotated) {
            break;
        }
    }
    SingularSystem out;
    out.right = std::move(v);
    for (Index j = 0; j < n; ++j) out.values.push_back(u.col(j).norm());
    return out;
}

void sort_spectrum(std::vector<Complex>& values) {
    std::sort(values.begin(), values.end(), [](const Complex& x, const Complex& y) {
        if (x.real() != y.real()) return x.real() < y.real();
        return x.imag() < y.imag();
    });
}

BlockEigensystem eigensystem(const CMatrix& a, const EigenOptions& opts) {
    BlockEigensystem out;
    out.eigenvalues = schur_eigenvalues(a);
    const double scale = std::max(1.0, inf_norm(a));
    const double cluster_tol = opts.cluster_tol * scale;
    const double null_tol = opts.null_tol * scale;

    // Single-linkage clusters over the sorted eigenvalues.
    std::vector<bool> used(out.eigenvalues.size(), false);
    for (std::size_t i = 0; i < out.eigenvalues.size(); ++i) {
        if (used[i]) continue;
        EigenCluster cluster;
        std::vector<std::size_t> members{i};
        used[i] = true;
        for (std::size_t m = 0; m < members.size(); ++m) {
            for (std::size_t j = 0; j < out.eigenvalues.size(); ++j) {
                if (!used[j] && std::abs(out.eigenvalues[j] - out.eigenvalues[members[m]]) <= cluster_tol) {
                    used[j] = true;
                    members.push_back(j);
                }
            }
        }
        std::sort(members.begin(), members.end());
        Complex centre = 0.0;
        for (auto j : members) {
            cluster.eigenvalues.push_back(out.eigenvalues[j]);
            centre += out.eigenvalues[j];
        }
        centre /= static_cast<double>(members.size());

        CMatrix shifted = a - centre * CMatrix::Identity(a.rows(), a.cols());
        SingularSystem svd = jacobi_svd(shifted);
        std::vector<Index> order(svd.values.size());
        std::iota(order.begin(), order.end(), Index{0});
        std::sort(order.begin(), order.end(), [&](Index x, Index y) {
            return svd.values[static_cast<std::size_t>(x)] < svd.values[static_cast<std::size_t>(y)];
        });
        for (std::size_t k = 0; k < members.size() && k < order.size(); ++k) {
            const Index col = order[k];
            if (svd.values[static_cast<std::size_t>(col)] > null_tol) {
                break;
            }
            CVector x = svd.right.col(col).normalized();
            cluster.vectors.push_back(x);
            cluster.rayleigh.push_back(x.dot(a * x));
        }
        out.defective += members.size() - cluster.vectors.size();
        out.clusters.push_back(std::move(cluster));
    }
    return out;
}

}  // namespace hspec::linalg
