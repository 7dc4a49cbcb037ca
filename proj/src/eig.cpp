#include "specgnn/eig.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace specgnn::linalg {

namespace {

struct HouseholderStep {
    std::vector<double> u;  // length i, support on indices 0..i-1
    double h = 0.0;         // u^T u / 2; transform is I - u u^T / h
    bool applied = false;
};

// Reduce the symmetric matrix a (destroyed) to tridiagonal form
// T = W A W^T with diag d and subdiag e (e[i] couples i and i+1).
// Each step's Householder vector is kept for accumulating W.
void tridiagonalize(DenseMatrix& a, std::vector<double>& d, std::vector<double>& e,
                    std::vector<HouseholderStep>& steps) {
    const std::size_t n = a.rows();
    d.assign(n, 0.0);
    e.assign(n, 0.0);  // e[i] = T(i, i+1), valid for i < n-1
    steps.assign(n, HouseholderStep{});

    std::vector<double> p(n), w(n);
    for (std::size_t i = n - 1; i >= 1; --i) {
        const std::size_t len = i;  // entries 0..i-1 of row i
        double scale = 0.0;
        for (std::size_t k = 0; k < len; ++k) scale += std::abs(a(i, k));
        if (scale == 0.0 || len == 1) {
            e[i - 1] = a(i, i - 1);
            d[i] = a(i, i);
            if (i == 1) break;
            continue;
        }
        auto& step = steps[i];
        step.u.resize(len);
        double h = 0.0;
        for (std::size_t k = 0; k < len; ++k) {
            step.u[k] = a(i, k) / scale;
            h += step.u[k] * step.u[k];
        }
        const double f = step.u[len - 1];
        const double g = f >= 0.0 ? -std::sqrt(h) : std::sqrt(h);
        e[i - 1] = scale * g;
        h -= f * g;
        step.u[len - 1] = f - g;
        step.h = h;
        step.applied = true;

        // Rank-2 update of the leading block: B <- B - u w^T - w u^T with
        // p = B u / h, w = p - (u^T p / 2h) u.
        for (std::size_t r = 0; r < len; ++r) {
            const double* ar = a.row_ptr(r);
            double s = 0.0;
            for (std::size_t k = 0; k < len; ++k) s += ar[k] * step.u[k];
            p[r] = s / h;
        }
        double up = 0.0;
        for (std::size_t r = 0; r < len; ++r) up += step.u[r] * p[r];
        const double kk = up / (2.0 * h);
        for (std::size_t r = 0; r < len; ++r) w[r] = p[r] - kk * step.u[r];
        for (std::size_t r = 0; r < len; ++r) {
            double* ar = a.row_ptr(r);
            const double ur = step.u[r];
            const double wr = w[r];
            for (std::size_t c = 0; c < len; ++c) ar[c] -= ur * w[c] + wr * step.u[c];
        }
        d[i] = a(i, i);
    }
    d[0] = a(0, 0);
    if (n >= 2) d[1] = a(1, 1);
}

// v = P_1 P_2 ... P_{n-1}, rows of v are the rows of the reduction transform W.
void accumulate_transform(const std::vector<HouseholderStep>& steps, DenseMatrix& v) {
    const std::size_t n = v.rows();
    for (std::size_t r = 0; r < n; ++r) {
        double* vr = v.row_ptr(r);
        std::fill(vr, vr + n, 0.0);
        vr[r] = 1.0;
    }
    std::vector<double> y;
    for (std::size_t i = 1; i < n; ++i) {
        const auto& step = steps[i];
        if (!step.applied) continue;
        const std::size_t len = step.u.size();
        y.assign(len, 0.0);
        for (std::size_t r = 0; r < len; ++r) {
            const double* vr = v.row_ptr(r);
            double s = 0.0;
            for (std::size_t k = 0; k < len; ++k) s += vr[k] * step.u[k];
            y[r] = s / step.h;
        }
        for (std::size_t r = 0; r < len; ++r) {
            double* vr = v.row_ptr(r);
            const double yr = y[r];
            for (std::size_t k = 0; k < len; ++k) vr[k] -= yr * step.u[k];
        }
    }
}

// Implicit-shift QL with Wilkinson shifts on (d, e); plane rotations are
// accumulated into the rows of v (row i of v tracks eigenvalue d[i]).
void ql_implicit(std::vector<double>& d, std::vector<double>& e, DenseMatrix& v) {
    const std::size_t n = d.size();
    if (n <= 1) return;
    const std::size_t max_total_iters = 64 * n;
    std::size_t total_iters = 0;

    for (std::size_t l = 0; l < n; ++l) {
        for (;;) {
            std::size_t m = l;
            while (m < n - 1) {
                const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
                if (std::abs(e[m]) <= DBL_EPSILON * dd + 1e-300) break;
                ++m;
            }
            if (m == l) break;
            if (++total_iters > max_total_iters) {
                throw std::runtime_error("symmetric_eig: QL failed to converge within " +
                                         std::to_string(max_total_iters) +
                                         " iterations (stuck at index " + std::to_string(l) + ")");
            }
            // Wilkinson shift from the leading 2x2 block at l.
            double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
            double r = std::hypot(g, 1.0);
            g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
            double s = 1.0, c = 1.0, p = 0.0;
            bool underflow = false;
            for (std::size_t i1 = m; i1-- > l;) {
                double f = s * e[i1];
                const double b = c * e[i1];
                r = std::hypot(f, g);
                e[i1 + 1] = r;
                if (r == 0.0) {
                    d[i1 + 1] -= p;
                    e[m] = 0.0;
                    underflow = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i1 + 1] - p;
                r = (d[i1] - g) * s + 2.0 * c * b;
                p = s * r;
                d[i1 + 1] = g + p;
                g = c * r - b;
                double* lo = v.row_ptr(i1);
                double* hi = v.row_ptr(i1 + 1);
                for (std::size_t k = 0; k < v.cols(); ++k) {
                    f = hi[k];
                    hi[k] = s * lo[k] + c * f;
                    lo[k] = c * lo[k] - s * f;
                }
            }
            if (underflow) continue;
            d[l] -= p;
            e[l] = g;
            e[m] = 0.0;
        }
    }
}

}  // namespace

EigenSystem symmetric_eig(const DenseMatrix& m) {
    if (m.rows() != m.cols()) {
        throw std::invalid_argument("symmetric_eig: matrix is not square: " + m.shape_str());
    }
    const std::size_t n = m.rows();
    if (n == 0) {
        throw std::invalid_argument("symmetric_eig: empty matrix");
    }
    m.check_finite("symmetric_eig");

    double asym = 0.0;
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = r + 1; c < n; ++c) {
            asym = std::max(asym, std::abs(m(r, c) - m(c, r)));
        }
    }
    const double tol = 1e-10 * std::max(1.0, m.max_abs());
    if (asym > tol) {
        throw std::invalid_argument("symmetric_eig: input asymmetric by " + std::to_string(asym) +
                                    " (tolerance " + std::to_string(tol) + ")");
    }

    DenseMatrix a(n, n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) a(r, c) = 0.5 * (m(r, c) + m(c, r));
    }

    std::vector<double> d, e;
    std::vector<HouseholderStep> steps;
    tridiagonalize(a, d, e, steps);

    DenseMatrix v(n, n);
    accumulate_transform(steps, v);
    ql_implicit(d, e, v);

    // Sort ascending; stable in the original index for determinism.
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t x, std::size_t y) { return d[x] < d[y]; });

    EigenSystem sys;
    sys.eigenvalues.resize(n);
    sys.eigenvectors = DenseMatrix(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        const std::size_t src = order[j];
        sys.eigenvalues[j] = d[src];
        const double* vec = v.row_ptr(src);
        double sign = 1.0;
        for (std::size_t k = 0; k < n; ++k) {
            if (std::abs(vec[k]) > 1e-12) {
                sign = vec[k] < 0.0 ? -1.0 : 1.0;
                break;
            }
        }
        for (std::size_t k = 0; k < n; ++k) sys.eigenvectors(k, j) = sign * vec[k];
    }
    return sys;
}

TruncatedEigenSystem truncate_spectrum(const EigenSystem& e, std::size_t num_smallest,
                                       std::size_t num_largest) {
    const std::size_t n = e.n();
    if (num_smallest + num_largest > n) {
        throw std::invalid_argument("truncate_spectrum: selecting " +
                                    std::to_string(num_smallest + num_largest) + " of " +
                                    std::to_string(n) + " eigenpairs");
    }
    TruncatedEigenSystem t;
    t.num_smallest = num_smallest;
    t.num_largest = num_largest;
    const std::size_t q = num_smallest + num_largest;
    t.eigenvalues.resize(q);
    t.eigenvectors = DenseMatrix(n, q);
    std::vector<std::size_t> cols(q);
    for (std::size_t j = 0; j < num_smallest; ++j) cols[j] = j;
    for (std::size_t j = 0; j < num_largest; ++j) cols[num_smallest + j] = n - num_largest + j;
    for (std::size_t j = 0; j < q; ++j) {
        t.eigenvalues[j] = e.eigenvalues[cols[j]];
        for (std::size_t r = 0; r < n; ++r) t.eigenvectors(r, j) = e.eigenvectors(r, cols[j]);
    }
    return t;
}

DenseMatrix spectral_apply(const DenseMatrix& eigenvectors, const DenseVector& new_eigenvalues,
                           const DenseMatrix& x) {
    if (new_eigenvalues.size() != eigenvectors.cols()) {
        throw std::invalid_argument("spectral_apply: " + std::to_string(new_eigenvalues.size()) +
                                    " filter values for " + std::to_string(eigenvectors.cols()) +
                                    " retained eigenpairs");
    }
    if (x.rows() != eigenvectors.rows()) {
        throw std::invalid_argument("spectral_apply: signal has " + std::to_string(x.rows()) +
                                    " rows, graph has " + std::to_string(eigenvectors.rows()) +
                                    " nodes");
    }
    DenseMatrix coeffs = matmul_at(eigenvectors, x);  // q x c
    for (std::size_t r = 0; r < coeffs.rows(); ++r) {
        double* cr = coeffs.row_ptr(r);
        const double g = new_eigenvalues[r];
        for (std::size_t c = 0; c < coeffs.cols(); ++c) cr[c] *= g;
    }
    return matmul(eigenvectors, coeffs);
}

DenseMatrix spectral_apply(const EigenSystem& e, const DenseVector& new_eigenvalues,
                           const DenseMatrix& x) {
    return spectral_apply(e.eigenvectors, new_eigenvalues, x);
}

DenseMatrix spectral_apply(const TruncatedEigenSystem& e, const DenseVector& new_eigenvalues,
                           const DenseMatrix& x) {
    return spectral_apply(e.eigenvectors, new_eigenvalues, x);
}

}  // namespace specgnn::linalg
