#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace specgnn::linalg {

// Row-major dense matrix of 64-bit floats. Entries must be finite; shapes are
// checked on every operation and mismatches throw std::invalid_argument with
// both shapes in the message.
class DenseMatrix {
public:
    DenseMatrix() = default;
    DenseMatrix(std::size_t rows, std::size_t cols);
    DenseMatrix(std::size_t rows, std::size_t cols, std::vector<double> data);

    static DenseMatrix identity(std::size_t n);
    static DenseMatrix zeros(std::size_t rows, std::size_t cols);
    static DenseMatrix ones(std::size_t rows, std::size_t cols);
    static DenseMatrix from_rows(const std::vector<std::vector<double>>& rows);
    static DenseMatrix column(const std::vector<double>& values);
    static DenseMatrix row(const std::vector<double>& values);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t size() const { return data_.size(); }
    bool empty() const { return data_.empty(); }

    double& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    double operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    double* row_ptr(std::size_t r) { return data_.data() + r * cols_; }
    const double* row_ptr(std::size_t r) const { return data_.data() + r * cols_; }

    std::vector<double>& data() { return data_; }
    const std::vector<double>& data() const { return data_; }

    std::string shape_str() const;

    DenseMatrix transposed() const;
    double max_abs() const;
    bool all_finite() const;

    // Throws std::invalid_argument if any entry is NaN or Inf.
    void check_finite(const std::string& context) const;

    bool same_shape(const DenseMatrix& other) const {
        return rows_ == other.rows_ && cols_ == other.cols_;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

using DenseVector = std::vector<double>;

// Standard product; pre: a.cols == b.rows. Accumulation over k is ascending
// for every output entry, so results are bit-deterministic.
DenseMatrix matmul(const DenseMatrix& a, const DenseMatrix& b);

// c = a * b^T without materializing the transpose.
DenseMatrix matmul_bt(const DenseMatrix& a, const DenseMatrix& b);

// c = a^T * b without materializing the transpose.
DenseMatrix matmul_at(const DenseMatrix& a, const DenseMatrix& b);

DenseMatrix add(const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix subtract(const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix hadamard(const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix scale(const DenseMatrix& a, double s);

double max_abs_diff(const DenseMatrix& a, const DenseMatrix& b);

}  // namespace specgnn::linalg
