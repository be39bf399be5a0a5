#ifndef APPROXDCT_METRICS_HPP
#define APPROXDCT_METRICS_HPP

#include <string>

#include "approxdct/real_matrix.hpp"
#include "approxdct/transform_class.hpp"

namespace approxdct {

inline constexpr double kDefaultRho = 0.95;

/// One table row of figures of merit for a transform.
struct MetricsReport {
    std::string label;
    double total_error_energy = 0.0;  // pi * ||C - Ct||_F^2
    double mse = 0.0;                 // trace(D R D^T) / N under AR(1)
    double coding_gain_db = 0.0;
    double transform_efficiency = 0.0;  // percent
    int adds = 0;
    int shifts = 0;
};

double total_error_energy(const RealMatrix& approx, int n);
double mse_metric(const RealMatrix& approx, int n, double rho);

/// Unified coding gain in dB. A_k = h_k R h_k^T over the forward rows,
/// B_k = squared norm of the k-th synthesis basis vector (columns of the
/// inverse, which is the transpose for orthonormal transforms).
double coding_gain_db(const RealMatrix& approx, int n, double rho);

/// Percentage of |R_y| mass on the diagonal, R_y = Ct R Ct^T. 100 for the KLT.
double transform_efficiency(const RealMatrix& approx, int n, double rho);

MetricsReport evaluate(const TransformKernel& kernel, double rho = kDefaultRho);

std::string metrics_csv_header();
std::string metrics_csv_row(const MetricsReport& r);
std::string metrics_json(const MetricsReport& r);  // one compact JSON object

}  // namespace approxdct

#endif
