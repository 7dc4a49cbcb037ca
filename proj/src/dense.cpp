#include "specgnn/dense.hpp"

#include <cmath>
#include <stdexcept>

namespace specgnn::linalg {

DenseMatrix::DenseMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, 0.0) {}

DenseMatrix::DenseMatrix(std::size_t rows, std::size_t cols, std::vector<double> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != rows_ * cols_) {
        throw std::invalid_argument("DenseMatrix: data length " + std::to_string(data_.size()) +
                                    " does not match shape " + shape_str());
    }
    check_finite("DenseMatrix construction");
}

DenseMatrix DenseMatrix::identity(std::size_t n) {
    DenseMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

DenseMatrix DenseMatrix::zeros(std::size_t rows, std::size_t cols) {
    return DenseMatrix(rows, cols);
}

DenseMatrix DenseMatrix::ones(std::size_t rows, std::size_t cols) {
    DenseMatrix m(rows, cols);
    for (double& v : m.data_) v = 1.0;
    return m;
}

DenseMatrix DenseMatrix::from_rows(const std::vector<std::vector<double>>& rows) {
    if (rows.empty()) return DenseMatrix();
    DenseMatrix m(rows.size(), rows[0].size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != m.cols_) {
            throw std::invalid_argument("DenseMatrix::from_rows: ragged row " + std::to_string(r));
        }
        for (std::size_t c = 0; c < m.cols_; ++c) m(r, c) = rows[r][c];
    }
    m.check_finite("DenseMatrix::from_rows");
    return m;
}

DenseMatrix DenseMatrix::column(const std::vector<double>& values) {
    DenseMatrix m(values.size(), 1, std::vector<double>(values));
    return m;
}

DenseMatrix DenseMatrix::row(const std::vector<double>& values) {
    DenseMatrix m(1, values.size(), std::vector<double>(values));
    return m;
}

std::string DenseMatrix::shape_str() const {
    return std::to_string(rows_) + "x" + std::to_string(cols_);
}

DenseMatrix DenseMatrix::transposed() const {
    DenseMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        const double* src = row_ptr(r);
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = src[c];
    }
    return t;
}

double DenseMatrix::max_abs() const {
    double m = 0.0;
    for (double v : data_) m = std::max(m, std::abs(v));
    return m;
}

bool DenseMatrix::all_finite() const {
    for (double v : data_) {
        if (!std::isfinite(v)) return false;
    }
    return true;
}

void DenseMatrix::check_finite(const std::string& context) const {
    if (!all_finite()) {
        throw std::invalid_argument(context + ": non-finite entry in " + shape_str() + " matrix");
    }
}

DenseMatrix matmul(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.cols() != b.rows()) {
        throw std::invalid_argument("matmul: dimension mismatch " + a.shape_str() + " * " +
                                    b.shape_str());
    }
    const std::size_t m = a.rows(), k = a.cols(), n = b.cols();
    DenseMatrix c(m, n);
    for (std::size_t i = 0; i < m; ++i) {
        double* ci = c.row_ptr(i);
        const double* ai = a.row_ptr(i);
        for (std::size_t p = 0; p < k; ++p) {
            const double aip = ai[p];
            const double* bp = b.row_ptr(p);
            for (std::size_t j = 0; j < n; ++j) ci[j] += aip * bp[j];
        }
    }
    return c;
}

DenseMatrix matmul_bt(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.cols() != b.cols()) {
        throw std::invalid_argument("matmul_bt: dimension mismatch " + a.shape_str() + " * " +
                                    b.shape_str() + "^T");
    }
    const std::size_t m = a.rows(), k = a.cols(), n = b.rows();
    DenseMatrix c(m, n);
    for (std::size_t i = 0; i < m; ++i) {
        double* ci = c.row_ptr(i);
        const double* ai = a.row_ptr(i);
        for (std::size_t j = 0; j < n; ++j) {
            const double* bj = b.row_ptr(j);
            double s = 0.0;
            for (std::size_t p = 0; p < k; ++p) s += ai[p] * bj[p];
            ci[j] = s;
        }
    }
    return c;
}

DenseMatrix matmul_at(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.rows() != b.rows()) {
        throw std::invalid_argument("matmul_at: dimension mismatch " + a.shape_str() + "^T * " +
                                    b.shape_str());
    }
    const std::size_t m = a.cols(), k = a.rows(), n = b.cols();
    DenseMatrix c(m, n);
    for (std::size_t p = 0; p < k; ++p) {
        const double* ap = a.row_ptr(p);
        const double* bp = b.row_ptr(p);
        for (std::size_t i = 0; i < m; ++i) {
            const double api = ap[i];
            double* ci = c.row_ptr(i);
            for (std::size_t j = 0; j < n; ++j) ci[j] += api * bp[j];
        }
    }
    return c;
}

namespace {

void require_same_shape(const DenseMatrix& a, const DenseMatrix& b, const char* op) {
    if (!a.same_shape(b)) {
        throw std::invalid_argument(std::string(op) + ": shape mismatch " + a.shape_str() +
                                    " vs " + b.shape_str());
    }
}

}  // namespace

DenseMatrix add(const DenseMatrix& a, const DenseMatrix& b) {
    require_same_shape(a, b, "add");
    DenseMatrix c(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.size(); ++i) c.data()[i] = a.data()[i] + b.data()[i];
    return c;
}

DenseMatrix subtract(const DenseMatrix& a, const DenseMatrix& b) {
    require_same_shape(a, b, "subtract");
    DenseMatrix c(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.size(); ++i) c.data()[i] = a.data()[i] - b.data()[i];
    return c;
}

DenseMatrix hadamard(const DenseMatrix& a, const DenseMatrix& b) {
    require_same_shape(a, b, "hadamard");
    DenseMatrix c(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.size(); ++i) c.data()[i] = a.data()[i] * b.data()[i];
    return c;
}

DenseMatrix scale(const DenseMatrix& a, double s) {
    DenseMatrix c(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.size(); ++i) c.data()[i] = a.data()[i] * s;
    return c;
}

double max_abs_diff(const DenseMatrix& a, const DenseMatrix& b) {
    require_same_shape(a, b, "max_abs_diff");
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        m = std::max(m, std::abs(a.data()[i] - b.data()[i]));
    }
    return m;
}

}  // namespace specgnn::linalg
