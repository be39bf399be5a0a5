#include <cmath>
#include <complex>
#include <numbers>

#include <doctest.h>

#include "approxdct/metrics.hpp"
#include "approxdct/transform_class.hpp"

using namespace approxdct;

namespace {

// Frequency-domain evaluation of the error energy: midpoint Riemann sum of
// sum_m int_0^pi |H_m(w) - Ht_m(w)|^2 dw with H the DTFT of each row.
double error_energy_riemann(const RealMatrix& approx, int n, int samples) {
    const RealMatrix ref = dct_matrix(n);
    const double dw = std::numbers::pi / samples;
    double total = 0.0;
    for (int m = 0; m < n; ++m) {
        for (int s = 0; s < samples; ++s) {
            const double w = (s + 0.5) * dw;
            std::complex<double> d{0.0, 0.0};
            for (int j = 0; j < n; ++j) {
                const double c = ref.at(m, j) - approx.at(m, j);
                d += c * std::exp(std::complex<double>(0.0, -w * j));
            }
            total += std::norm(d) * dw;
        }
    }
    return total;
}

RealMatrix permute_rows(const RealMatrix& m, const std::vector<int>& perm) {
    RealMatrix out(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) out.at(i, j) = m.at(perm[i], j);
    return out;
}

}  // namespace

TEST_CASE("self distance is zero") {
    CHECK(total_error_energy(dct_matrix(8), 8) == 0.0);
    CHECK(mse_metric(dct_matrix(8), 8, 0.95) == 0.0);
}

TEST_CASE("published 8-point table rows reproduce") {
    struct Row {
        const char* key;
        double eps, mse, cg, eta;
        int adds, shifts;
    };
    const Row rows[] = {
        {"mrdct", 8.6592, 0.0594, 7.3326, 80.8969, 14, 0},
        {"ocbt", 6.8543, 0.0275, 7.9118, 85.6419, 16, 0},
        {"j3", 5.0493, 0.0246, 7.9207, 85.3793, 18, 0},
        {"j4", 5.0184, 0.0241, 8.1102, 86.8665, 18, 2},
        {"j5", 16.0260, 0.0333, 8.1571, 88.1932, 22, 0},
        {"rdct", 1.7945, 0.0098, 8.1827, 87.4297, 22, 0},
        {"j7", 2.1443, 0.0083, 8.4261, 89.1383, 22, 4},
    };
    for (const auto& row : rows) {
        CAPTURE(row.key);
        const MetricsReport r = evaluate(*builtin_kernel(row.key), 0.95);
        CHECK(std::abs(r.total_error_energy - row.eps) < 1e-3);
        CHECK(std::abs(r.mse - row.mse) < 1e-3);
        CHECK(std::abs(r.coding_gain_db - row.cg) < 1e-3);
        CHECK(std::abs(r.transform_efficiency - row.eta) < 1e-3);
        CHECK(r.adds == row.adds);
        CHECK(r.shifts == row.shifts);
    }
}

TEST_CASE("table rows j3, j5, j6 via evaluate") {
    const MetricsReport j6 = evaluate(*builtin_kernel("rdct"), 0.95);
    CHECK(std::abs(j6.total_error_energy - 1.7945) < 1e-3);
    CHECK(std::abs(j6.mse - 0.0098) < 1e-3);
    CHECK(std::abs(j6.coding_gain_db - 8.1827) < 1e-3);
    CHECK(std::abs(j6.transform_efficiency - 87.4297) < 1e-3);
    CHECK(j6.adds == 22);
    CHECK(j6.shifts == 0);

    const MetricsReport j3 = evaluate(*builtin_kernel("j3"), 0.95);
    CHECK(std::abs(j3.total_error_energy - 5.0493) < 1e-3);
    CHECK(std::abs(j3.mse - 0.0246) < 1e-3);
    CHECK(std::abs(j3.coding_gain_db - 7.9207) < 1e-3);
    CHECK(std::abs(j3.transform_efficiency - 85.3793) < 1e-3);
    CHECK(j3.adds == 18);

    const MetricsReport j5 = evaluate(*builtin_kernel("j5"), 0.95);
    CHECK(std::abs(j5.total_error_energy - 16.0260) < 1e-3);
    CHECK(std::abs(j5.mse - 0.0333) < 1e-3);
    CHECK(std::abs(j5.coding_gain_db - 8.1571) < 1e-3);
    CHECK(std::abs(j5.transform_efficiency - 88.1932) < 1e-3);
    CHECK(j5.adds == 22);
    CHECK(j5.shifts == 0);
}

TEST_CASE("identity transform has zero coding gain") {
    CHECK(coding_gain_db(RealMatrix::identity(8), 8, 0.95) == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(coding_gain_db(RealMatrix::identity(8), 8, 0.5) == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("efficiency is 100 for a white process") {
    for (const char* key : {"mrdct", "rdct", "j7"})
        CHECK(transform_efficiency(builtin_kernel(key)->matrix(), 8, 0.0) ==
              doctest::Approx(100.0).epsilon(1e-12));
}

TEST_CASE("exact DCT coding gain tops every approximation") {
    const double dct_cg = coding_gain_db(dct_matrix(8), 8, 0.95);
    CHECK(dct_cg == doctest::Approx(8.8259).epsilon(1e-4));
    for (const auto& entry : optimal_table())
        CHECK(evaluate(orthonormalize(entry.a), 0.95).coding_gain_db < dct_cg);
}

TEST_CASE("frequency-domain error energy agrees with the matrix form") {
    for (const char* key : {"mrdct", "rdct", "j7"}) {
        const RealMatrix m = builtin_kernel(key)->matrix();
        const double direct = total_error_energy(m, 8);
        const double riemann = error_energy_riemann(m, 8, 1 << 14);
        CHECK(std::abs(direct - riemann) / direct < 1e-6);
    }
}

TEST_CASE("row permutation invariance holds for coding metrics only") {
    const RealMatrix m = builtin_kernel("rdct")->matrix();
    const std::vector<int> perm = {3, 1, 0, 2, 7, 5, 6, 4};
    const RealMatrix p = permute_rows(m, perm);
    CHECK(coding_gain_db(p, 8, 0.95) ==
          doctest::Approx(coding_gain_db(m, 8, 0.95)).epsilon(1e-9));
    CHECK(transform_efficiency(p, 8, 0.95) ==
          doctest::Approx(transform_efficiency(m, 8, 0.95)).epsilon(1e-9));
    CHECK(std::abs(total_error_energy(p, 8) - total_error_energy(m, 8)) > 0.1);
    CHECK(std::abs(mse_metric(p, 8, 0.95) - mse_metric(m, 8, 0.95)) > 1e-4);
}

TEST_CASE("dimension mismatches and non-orthogonal kernels are rejected") {
    CHECK_THROWS_AS(total_error_energy(dct_matrix(8), 16), std::invalid_argument);
    CHECK_THROWS_AS(mse_metric(dct_matrix(8), 8, 1.0), std::invalid_argument);
    TransformKernel k = *builtin_kernel("rdct");
    k.orthogonal = false;
    CHECK_THROWS_AS(evaluate(k, 0.95), std::invalid_argument);
}

TEST_CASE("singular transforms are rejected by coding gain") {
    RealMatrix z(8, 8);
    CHECK_THROWS_AS(coding_gain_db(z, 8, 0.95), std::domain_error);
}

TEST_CASE("csv row format") {
    const MetricsReport r = evaluate(*builtin_kernel("mrdct"), 0.95);
    CHECK(metrics_csv_header() == "label,epsilon,mse,coding_gain_db,efficiency_pct,adds,shifts");
    const std::string row = metrics_csv_row(r);
    CHECK(row.rfind("MRDCT,8.659", 0) == 0);
    CHECK(row.find(",14,0") != std::string::npos);
}
