#include <cmath>
#include <numbers>
#include <random>

#include <doctest.h>

#include "approxdct/fast_algorithm.hpp"
#include "approxdct/transform_class.hpp"

using namespace approxdct;

namespace {

ParamVector random_vector(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> digit(0, 6);
    std::array<Dyadic, kNumParams> a;
    for (auto& v : a) v = param_domain()[digit(rng)];
    return ParamVector(a);
}

double max_offdiag(const RealMatrix& m) {
    double worst = 0.0;
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            if (i != j) worst = std::max(worst, std::abs(m.at(i, j)));
    return worst;
}

// Positions of T*T^T that are structurally zero for every parameter vector.
bool structurally_zero(int i, int j) {
    if (i == j) return false;
    if (i % 2 == 0 || j % 2 == 0) return true;  // even rows are parameter-free
    return false;
}

}  // namespace

TEST_CASE("parameter domain and vector validation") {
    CHECK(in_param_domain(Dyadic::half()));
    CHECK(in_param_domain(Dyadic(-2)));
    CHECK_FALSE(in_param_domain(Dyadic(3)));
    CHECK_FALSE(in_param_domain(Dyadic::scaled(1, 2)));
    std::array<Dyadic, 8> bad{};
    bad[3] = Dyadic(4);
    CHECK_THROWS_AS(ParamVector(bad), std::invalid_argument);
    CHECK(ParamVector::parse("1 1/2 1/2 1 1 1/2 1/2 1").str() == "[1 1/2 1/2 1 1 1/2 1/2 1]");
    CHECK_THROWS_AS(ParamVector::parse("1 2 3"), std::invalid_argument);
}

TEST_CASE("T(0) is the all-zero-parameter matrix with entries in {0,+-1}") {
    const DyadicMatrix t = build_T(ParamVector{});
    CHECK(t.scale_exp() == 0);
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) CHECK(std::abs(t.raw(i, j)) <= 1);
    // Spot rows fixed by the layout.
    for (int j = 0; j < 8; ++j) CHECK(t.at(0, j) == Dyadic(1));
}

TEST_CASE("row 4 is parameter-free") {
    std::mt19937_64 rng(23);
    const long long expected[8] = {1, -1, -1, 1, 1, -1, -1, 1};
    for (int trial = 0; trial < 40; ++trial) {
        const DyadicMatrix t = build_T(random_vector(rng));
        for (int j = 0; j < 8; ++j)
            CHECK(t.at(4, j) == Dyadic(expected[j]));
    }
}

TEST_CASE("tau profile matches direct substitution") {
    const TauProfile zero = tau_profile(ParamVector{});
    for (const int off : {1, 2, 3, 5, 6, 8}) CHECK(zero.tau[off].zero());
    for (const int diag : {0, 4, 7, 9}) CHECK(zero.tau[diag] == Dyadic(2));

    const TauProfile ocbt = tau_profile(ParamVector::parse("1 0 0 0 1 0 0 0"));
    for (const int off : {1, 2, 3, 5, 6, 8}) CHECK(ocbt.tau[off].zero());

    const TauProfile t = tau_profile(ParamVector::parse("1 1 0 0 0 0 0 0"));
    CHECK(t.tau[2] == Dyadic(-2));  // tau_3 = -2a1 + 2a5
}

TEST_CASE("diagonal tau values never drop below 2") {
    std::mt19937_64 rng(29);
    for (int trial = 0; trial < 500; ++trial) {
        const TauProfile p = tau_profile(random_vector(rng));
        for (const int diag : {0, 4, 7, 9}) CHECK(p.tau[diag].value() >= 2.0);
    }
}

TEST_CASE("orthogonality examples") {
    for (const auto& entry : optimal_table()) CHECK(is_orthogonal(entry.a));
    CHECK(is_orthogonal(ParamVector{}));
    CHECK_FALSE(is_orthogonal(ParamVector::parse("2 0 0 0 0 0 0 0")));
    CHECK(tau_profile(ParamVector::parse("2 0 0 0 0 0 0 0")).tau[2] == Dyadic(-4));
}

TEST_CASE("gram matrix structure matches the tau layout") {
    std::mt19937_64 rng(31);
    // tau indices (1-based) by position in T*T^T, odd rows/columns only.
    const int tau_at[8][8] = {
        {0, 0, 0, 0, 0, 0, 0, 0}, {0, 1, 0, 2, 0, 3, 0, 4}, {0, 0, 0, 0, 0, 0, 0, 0},
        {0, 2, 0, 5, 0, 6, 0, 7}, {0, 0, 0, 0, 0, 0, 0, 0}, {0, 3, 0, 6, 0, 8, 0, 9},
        {0, 0, 0, 0, 0, 0, 0, 0}, {0, 4, 0, 7, 0, 9, 0, 10}};
    for (int trial = 0; trial < 200; ++trial) {
        const ParamVector a = random_vector(rng);
        const DyadicMatrix t = build_T(a);
        const DyadicMatrix gram = t * t.transposed();
        const TauProfile p = tau_profile(a);
        for (int i = 0; i < 8; ++i)
            for (int j = 0; j < 8; ++j) {
                if (structurally_zero(i, j)) {
                    CHECK(gram.at(i, j).zero());
                } else if (i != j) {
                    CHECK(gram.at(i, j) == p.tau[tau_at[i][j] - 1]);
                }
            }
        // Fixed diagonal slots.
        CHECK(gram.at(0, 0) == Dyadic(8));
        CHECK(gram.at(2, 2) == Dyadic(4));
        CHECK(gram.at(4, 4) == Dyadic(8));
        CHECK(gram.at(6, 6) == Dyadic(4));
        // Orthogonality test agrees with the diagonality oracle.
        CHECK(is_orthogonal(a) == gram.is_diagonal());
    }
}

TEST_CASE("T(0) gram diagonal") {
    const DyadicMatrix t = build_T(ParamVector{});
    const DyadicMatrix gram = t * t.transposed();
    CHECK(gram.is_diagonal());
    const long long expect[8] = {8, 2, 4, 2, 8, 2, 4, 2};
    for (int i = 0; i < 8; ++i) CHECK(gram.at(i, i) == Dyadic(expect[i]));
}

TEST_CASE("reduced constraint system matches the tau test") {
    std::mt19937_64 rng(37);
    for (int trial = 0; trial < 2000; ++trial) {
        const ParamVector a = random_vector(rng);
        const bool reduced = a[2] == a[1] && a[4] == a[0] && a[6] == a[5] && a[7] == a[3] &&
                             a[0] * a[1] == a[3] * a[5] && a[0] * a[5] == a[1] * a[3];
        CHECK(reduced == is_orthogonal(a));
    }
}

TEST_CASE("scaling matrix values and normalization property") {
    const RealMatrix s0 = scaling_matrix(ParamVector{});
    const double inv2s2 = 1.0 / (2.0 * std::numbers::sqrt2);
    const double invs2 = 1.0 / std::numbers::sqrt2;
    const double expect0[8] = {inv2s2, invs2, 0.5, invs2, inv2s2, invs2, 0.5, invs2};
    for (int i = 0; i < 8; ++i) CHECK(s0.at(i, i) == doctest::Approx(expect0[i]).epsilon(1e-15));

    const RealMatrix s6 = scaling_matrix(ParamVector::parse("1 1 1 1 1 1 1 1"));
    for (const int slot : {1, 3, 5, 7})
        CHECK(s6.at(slot, slot) == doctest::Approx(1.0 / std::sqrt(6.0)).epsilon(1e-15));

    for (const auto& entry : optimal_table()) {
        const RealMatrix s = scaling_matrix(entry.a);
        const RealMatrix check = s * build_T(entry.a).to_real() *
                                 build_T(entry.a).to_real().transposed() * s.transposed();
        CHECK(max_offdiag(check) < 1e-12);
        for (int i = 0; i < 8; ++i) CHECK(check.at(i, i) == doctest::Approx(1.0).epsilon(1e-12));
    }

    CHECK_THROWS_AS(scaling_matrix(ParamVector::parse("2 0 0 0 0 0 0 0")), std::invalid_argument);
}

TEST_CASE("orthonormalize produces two-sided orthonormal kernels") {
    for (const auto& entry : optimal_table()) {
        const TransformKernel k = orthonormalize(entry.a);
        CHECK(k.orthogonal);
        CHECK(k.label == entry.label);
        const RealMatrix m = k.matrix();
        const RealMatrix left = m * m.transposed();
        const RealMatrix right = m.transposed() * m;
        for (int i = 0; i < 8; ++i)
            for (int j = 0; j < 8; ++j) {
                const double want = i == j ? 1.0 : 0.0;
                CHECK(std::abs(left.at(i, j) - want) < 1e-12);
                CHECK(std::abs(right.at(i, j) - want) < 1e-12);
            }
    }
    const TransformKernel j7 = orthonormalize(ParamVector::parse("1 1/2 1/2 1 1 1/2 1/2 1"));
    CHECK(j7.adds == 22);
    CHECK(j7.shifts == 4);
    CHECK_THROWS_AS(orthonormalize(ParamVector::parse("2 0 0 0 0 0 0 0")), std::invalid_argument);
}

TEST_CASE("kernel serialization round-trips") {
    for (const auto& entry : optimal_table()) {
        const TransformKernel k = orthonormalize(entry.a);
        const TransformKernel back = parse_kernel(serialize_kernel(k));
        CHECK(back.low == k.low);
        CHECK(back.label == k.label);
        CHECK(back.adds == k.adds);
        CHECK(back.shifts == k.shifts);
        CHECK(back.orthogonal);
        REQUIRE(back.scale.size() == k.scale.size());
        for (std::size_t i = 0; i < k.scale.size(); ++i)
            CHECK(back.scale[i] == doctest::Approx(k.scale[i]).epsilon(1e-15));
        // Structure survives: the parsed kernel keeps the fast path.
        CHECK(back.param.has_value());
    }
}

TEST_CASE("kernel parser rejects malformed input") {
    CHECK_THROWS_AS(parse_kernel("not a kernel"), std::invalid_argument);
    const std::string text = serialize_kernel(orthonormalize(ParamVector{}));
    std::string broken = text;
    broken.replace(broken.find("size 8"), 6, "size 9");
    CHECK_THROWS(parse_kernel(broken));
    CHECK_THROWS_AS(serialize_kernel(dct_kernel(8)), std::invalid_argument);
}

TEST_CASE("builtin kernels resolve by key and alias") {
    CHECK(builtin_kernel("rdct")->label == "RDCT");
    CHECK(builtin_kernel("j6")->label == "RDCT");
    CHECK(builtin_kernel("MRDCT")->label == "MRDCT");
    CHECK(builtin_kernel("j7", 16)->label == "new-j7@16");
    CHECK(builtin_kernel("dct", 32)->label == "DCT@32");
    CHECK_FALSE(builtin_kernel("nope").has_value());
    CHECK_FALSE(builtin_kernel("rdct", 12).has_value());
}
