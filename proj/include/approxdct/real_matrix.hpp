#ifndef APPROXDCT_REAL_MATRIX_HPP
#define APPROXDCT_REAL_MATRIX_HPP

#include <span>
#include <vector>

namespace approxdct {

/// Dense double-precision matrix, row-major. Sizes here never exceed a few dozen.
class RealMatrix {
public:
    RealMatrix() = default;
    RealMatrix(int rows, int cols, double fill = 0.0);
    static RealMatrix identity(int n);
    static RealMatrix diagonal(std::span<const double> d);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    double at(int i, int j) const { return data_[idx(i, j)]; }
    double& at(int i, int j) { return data_[idx(i, j)]; }

    RealMatrix operator*(const RealMatrix& rhs) const;
    RealMatrix operator-(const RealMatrix& rhs) const;
    RealMatrix transposed() const;

    /// Gaussian elimination with partial pivoting; throws std::domain_error when singular.
    RealMatrix inverse() const;

    std::vector<double> apply(std::span<const double> x) const;

    double frobenius_sq() const;
    double max_abs_off_diagonal() const;
    bool all_finite() const;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<double> data_;

    std::size_t idx(int i, int j) const;
};

/// Orthonormal DCT-II matrix: C[k][n] = sqrt(2/N) * beta_k * cos(pi*k*(2n+1)/(2N)).
RealMatrix dct_matrix(int n);

/// Unit-diagonal AR(1) covariance [rho^|i-j|], |rho| < 1.
RealMatrix ar1_covariance(int n, double rho);

}  // namespace approxdct

#endif
