#include "approxdct/metrics.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <stdexcept>

#include <json.hpp>

namespace approxdct {

namespace {

void check_dims(const RealMatrix& m, int n, const char* what) {
    if (m.rows() != n || m.cols() != n)
        throw std::invalid_argument(std::string(what) + ": matrix is not the stated size");
}

bool orthonormal_within(const RealMatrix& m, double tol) {
    const RealMatrix g = m * m.transposed();
    for (int i = 0; i < g.rows(); ++i)
        for (int j = 0; j < g.cols(); ++j) {
            const double want = i == j ? 1.0 : 0.0;
            if (std::abs(g.at(i, j) - want) > tol) return false;
        }
    return true;
}

std::string fmt(double v) {
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

}  // namespace

double total_error_energy(const RealMatrix& approx, int n) {
    check_dims(approx, n, "total error energy");
    return std::numbers::pi * (dct_matrix(n) - approx).frobenius_sq();
}

double mse_metric(const RealMatrix& approx, int n, double rho) {
    check_dims(approx, n, "mse");
    const RealMatrix d = dct_matrix(n) - approx;
    const RealMatrix prod = d * ar1_covariance(n, rho) * d.transposed();
    double trace = 0.0;
    for (int i = 0; i < n; ++i) trace += prod.at(i, i);
    return trace / n;
}

double coding_gain_db(const RealMatrix& approx, int n, double rho) {
    check_dims(approx, n, "coding gain");
    const RealMatrix r = ar1_covariance(n, rho);
    // Synthesis basis: columns of the inverse, which is the transpose whenever
    // the transform is orthonormal (then B_k = ||row k||^2 exactly).
    const bool ortho = orthonormal_within(approx, 1e-10);
    const RealMatrix inv = ortho ? approx.transposed() : approx.inverse();
    double product = 1.0;
    for (int k = 0; k < n; ++k) {
        double a = 0.0;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) a += approx.at(k, i) * r.at(i, j) * approx.at(k, j);
        double b = 0.0;
        for (int i = 0; i < n; ++i) b += inv.at(i, k) * inv.at(i, k);
        product *= 1.0 / (a * b);
    }
    return 10.0 / n * std::log10(product);
}

double transform_efficiency(const RealMatrix& approx, int n, double rho) {
    check_dims(approx, n, "transform efficiency");
    const RealMatrix ry = approx * ar1_covariance(n, rho) * approx.transposed();
    double diag = 0.0, total = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const double m = std::abs(ry.at(i, j));
            total += m;
            if (i == j) diag += m;
        }
    return 100.0 * diag / total;
}

MetricsReport evaluate(const TransformKernel& kernel, double rho) {
    if (!kernel.orthogonal)
        throw std::invalid_argument("metrics require an orthogonal kernel");
    const int n = kernel.size();
    const RealMatrix m = kernel.matrix();
    MetricsReport r;
    r.label = kernel.label;
    r.total_error_energy = total_error_energy(m, n);
    r.mse = mse_metric(m, n, rho);
    r.coding_gain_db = coding_gain_db(m, n, rho);
    r.transform_efficiency = transform_efficiency(m, n, rho);
    r.adds = kernel.adds;
    r.shifts = kernel.shifts;
    return r;
}

std::string metrics_csv_header() {
    return "label,epsilon,mse,coding_gain_db,efficiency_pct,adds,shifts";
}

std::string metrics_csv_row(const MetricsReport& r) {
    return r.label + "," + fmt(r.total_error_energy) + "," + fmt(r.mse) + "," +
           fmt(r.coding_gain_db) + "," + fmt(r.transform_efficiency) + "," +
           std::to_string(r.adds) + "," + std::to_string(r.shifts);
}

std::string metrics_json(const MetricsReport& r) {
    return nlohmann::json{{"label", r.label},
                          {"epsilon", r.total_error_energy},
                          {"mse", r.mse},
                          {"coding_gain_db", r.coding_gain_db},
                          {"efficiency_pct", r.transform_efficiency},
                          {"adds", r.adds},
                          {"shifts", r.shifts}}
        .dump();
}

}  // namespace approxdct
