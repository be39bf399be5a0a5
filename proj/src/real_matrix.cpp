#include "approxdct/real_matrix.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace approxdct {

RealMatrix::RealMatrix(int rows, int cols, double fill)
    : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, fill) {
    if (rows <= 0 || cols <= 0) throw std::invalid_argument("matrix dimensions must be positive");
}

RealMatrix RealMatrix::identity(int n) {
    RealMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1.0;
    return m;
}

RealMatrix RealMatrix::diagonal(std::span<const double> d) {
    RealMatrix m(static_cast<int>(d.size()), static_cast<int>(d.size()));
    for (std::size_t i = 0; i < d.size(); ++i) m.at(static_cast<int>(i), static_cast<int>(i)) = d[i];
    return m;
}

std::size_t RealMatrix::idx(int i, int j) const {
    if (i < 0 || i >= rows_ || j < 0 || j >= cols_)
        throw std::out_of_range("matrix index out of range");
    return static_cast<std::size_t>(i) * cols_ + j;
}

RealMatrix RealMatrix::operator*(const RealMatrix& rhs) const {
    if (cols_ != rhs.rows_) throw std::invalid_argument("matrix product dimension mismatch");
    RealMatrix out(rows_, rhs.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < rhs.cols_; ++j) {
            double acc = 0.0;
            for (int k = 0; k < cols_; ++k) acc += at(i, k) * rhs.at(k, j);
            out.at(i, j) = acc;
        }
    return out;
}

RealMatrix RealMatrix::operator-(const RealMatrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
        throw std::invalid_argument("matrix difference dimension mismatch");
    RealMatrix out(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] - rhs.data_[i];
    return out;
}

RealMatrix RealMatrix::transposed() const {
    RealMatrix out(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
    return out;
}

RealMatrix RealMatrix::inverse() const {
    if (rows_ != cols_) throw std::invalid_argument("only square matrices invert");
    const int n = rows_;
    RealMatrix a(*this);
    RealMatrix inv = identity(n);
    for (int col = 0; col < n; ++col) {
        int pivot = col;
        for (int r = col + 1; r < n; ++r)
            if (std::abs(a.at(r, col)) > std::abs(a.at(pivot, col))) pivot = r;
        if (std::abs(a.at(pivot, col)) < 1e-12) throw std::domain_error("singular matrix");
        if (pivot != col)
            for (int j = 0; j < n; ++j) {
                std::swap(a.at(pivot, j), a.at(col, j));
                std::swap(inv.at(pivot, j), inv.at(col, j));
            }
        const double d = a.at(col, col);
        for (int j = 0; j < n; ++j) {
            a.at(col, j) /= d;
            inv.at(col, j) /= d;
        }
        for (int r = 0; r < n; ++r) {
            if (r == col) continue;
            const double f = a.at(r, col);
            if (f == 0.0) continue;
            for (int j = 0; j < n; ++j) {
                a.at(r, j) -= f * a.at(col, j);
                inv.at(r, j) -= f * inv.at(col, j);
            }
        }
    }
    return inv;
}

std::vector<double> RealMatrix::apply(std::span<const double> x) const {
    if (static_cast<int>(x.size()) != cols_)
        throw std::invalid_argument("matrix apply dimension mismatch");
    std::vector<double> y(rows_, 0.0);
    for (int i = 0; i < rows_; ++i) {
        double acc = 0.0;
        for (int j = 0; j < cols_; ++j) acc += at(i, j) * x[j];
        y[i] = acc;
    }
    return y;
}

double RealMatrix::frobenius_sq() const {
    double acc = 0.0;
    for (const double v : data_) acc += v * v;
    return acc;
}

double RealMatrix::max_abs_off_diagonal() const {
    double m = 0.0;
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if (i != j) m = std::max(m, std::abs(at(i, j)));
    return m;
}

bool RealMatrix::all_finite() const {
    for (const double v : data_)
        if (!std::isfinite(v)) return false;
    return true;
}

RealMatrix dct_matrix(int n) {
    if (n < 2) throw std::invalid_argument("transform size must be at least 2");
    RealMatrix c(n, n);
    const double norm = std::sqrt(2.0 / n);
    for (int k = 0; k < n; ++k) {
        const double beta = k == 0 ? 1.0 / std::numbers::sqrt2 : 1.0;
        for (int j = 0; j < n; ++j)
            c.at(k, j) = norm * beta * std::cos(std::numbers::pi * k * (2 * j + 1) / (2.0 * n));
    }
    return c;
}

RealMatrix ar1_covariance(int n, double rho) {
    if (!(std::abs(rho) < 1.0)) throw std::invalid_argument("correlation must satisfy |rho| < 1");
    if (n < 1) throw std::invalid_argument("covariance size must be positive");
    RealMatrix r(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) r.at(i, j) = std::pow(rho, std::abs(i - j));
    return r;
}

}  // namespace approxdct
