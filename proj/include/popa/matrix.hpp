#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <vector>

namespace popa {

// Dense row-major matrix of doubles. Row-major storage order is load-bearing:
// every reduction in this library accumulates in row-major order so results
// are reproducible bit-for-bit.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, double value = 0.0)
        : rows_(rows), cols_(cols), data_(rows * cols, value) {}

    static Matrix from_rows(std::initializer_list<std::initializer_list<double>> rows) {
        Matrix m;
        m.rows_ = rows.size();
        m.cols_ = rows.size() == 0 ? 0 : rows.begin()->size();
        m.data_.reserve(m.rows_ * m.cols_);
        for (const auto& row : rows) {
            if (row.size() != m.cols_) throw std::invalid_argument("ragged rows in matrix literal");
            m.data_.insert(m.data_.end(), row.begin(), row.end());
        }
        return m;
    }

    double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return data_.empty(); }

    double* row(std::size_t i) { return data_.data() + i * cols_; }
    const double* row(std::size_t i) const { return data_.data() + i * cols_; }

    std::vector<double>& data() { return data_; }
    const std::vector<double>& data() const { return data_; }

    Matrix transposed() const {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    bool operator==(const Matrix&) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

// Row-major boolean mask with the same shape conventions as Matrix.
class Mask {
public:
    Mask() = default;
    Mask(std::size_t rows, std::size_t cols, bool value = false)
        : rows_(rows), cols_(cols), data_(rows * cols, value ? 1 : 0) {}

    void set(std::size_t i, std::size_t j, bool v) { data_[i * cols_ + j] = v ? 1 : 0; }
    bool operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j] != 0; }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    std::size_t count() const {
        std::size_t c = 0;
        for (auto v : data_) c += v;
        return c;
    }

    bool operator==(const Mask&) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<std::uint8_t> data_;
};

}  // namespace popa
