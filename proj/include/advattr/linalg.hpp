#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace advattr {

using Vector = std::vector<double>;

// Dense row-major matrix of doubles.
struct Matrix {
    int rows = 0;
    int cols = 0;
    std::vector<double> data;

    Matrix() = default;
    Matrix(int r, int c, double fill = 0.0)
        : rows(r), cols(c), data(static_cast<std::size_t>(r) * static_cast<std::size_t>(c), fill) {
        if (r < 0 || c < 0) throw std::invalid_argument("Matrix: negative dimension");
    }

    double& operator()(int i, int j) { return data[static_cast<std::size_t>(i) * cols + j]; }
    const double& operator()(int i, int j) const { return data[static_cast<std::size_t>(i) * cols + j]; }

    Vector row(int i) const {
        return Vector(data.begin() + static_cast<std::ptrdiff_t>(i) * cols,
                      data.begin() + static_cast<std::ptrdiff_t>(i + 1) * cols);
    }

    bool operator==(const Matrix& o) const = default;
};

inline void require(bool cond, const std::string& msg) {
    if (!cond) throw std::invalid_argument(msg);
}

inline bool all_finite(const Vector& v) {
    for (double x : v)
        if (!std::isfinite(x)) return false;
    return true;
}

inline bool all_finite(const Matrix& m) {
    for (double x : m.data)
        if (!std::isfinite(x)) return false;
    return true;
}

inline double dot(const Vector& a, const Vector& b) {
    require(a.size() == b.size(), "dot: length mismatch");
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline double norm2(const Vector& a) {
    double s = 0.0;
    for (double x : a) s += x * x;
    return std::sqrt(s);
}

// y = M x
inline Vector matvec(const Matrix& m, const Vector& x) {
    require(static_cast<int>(x.size()) == m.cols, "matvec: dimension mismatch");
    Vector y(m.rows, 0.0);
    for (int i = 0; i < m.rows; ++i) {
        double s = 0.0;
        const double* row = m.data.data() + static_cast<std::size_t>(i) * m.cols;
        for (int j = 0; j < m.cols; ++j) s += row[j] * x[j];
        y[i] = s;
    }
    return y;
}

// y = M^T x
inline Vector matvec_t(const Matrix& m, const Vector& x) {
    require(static_cast<int>(x.size()) == m.rows, "matvec_t: dimension mismatch");
    Vector y(m.cols, 0.0);
    for (int i = 0; i < m.rows; ++i) {
        const double s = x[i];
        const double* row = m.data.data() + static_cast<std::size_t>(i) * m.cols;
        for (int j = 0; j < m.cols; ++j) y[j] += row[j] * s;
    }
    return y;
}

// M += scale * a b^T
inline void add_outer(Matrix& m, double scale, const Vector& a, const Vector& b) {
    require(static_cast<int>(a.size()) == m.rows && static_cast<int>(b.size()) == m.cols,
            "add_outer: dimension mismatch");
    for (int i = 0; i < m.rows; ++i) {
        double* row = m.data.data() + static_cast<std::size_t>(i) * m.cols;
        const double s = scale * a[i];
        for (int j = 0; j < m.cols; ++j) row[j] += s * b[j];
    }
}

} // namespace advattr
