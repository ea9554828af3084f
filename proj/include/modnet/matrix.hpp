#pragma once

#include <cstddef>
#include <vector>

namespace modnet {

/// Dense row-major matrix of doubles. Row index = output unit,
/// column index = input unit for weight matrices.
struct Matrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<double> data;

    Matrix() = default;
    Matrix(std::size_t r, std::size_t c, double fill = 0.0) : rows(r), cols(c), data(r * c, fill) {}

    double& operator()(std::size_t r, std::size_t c) { return data[r * cols + c]; }
    const double& operator()(std::size_t r, std::size_t c) const { return data[r * cols + c]; }

    std::size_t size() const { return data.size(); }

    bool same_shape(const Matrix& other) const { return rows == other.rows && cols == other.cols; }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows == b.rows && a.cols == b.cols && a.data == b.data;
    }
};

}  // namespace modnet
