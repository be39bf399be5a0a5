#include "approxdct/fast_algorithm.hpp"

#include <stdexcept>

namespace approxdct {

namespace {

struct KTerm {
    int src;      // operand index within the stage input
    Dyadic coef;  // in {0, +-1/2, +-1, +-2}
};

// The 4x4 parameter block maps stage inputs (p4..p7) to outputs (z4..z7):
//   z4 = -a4 p4 -    p5          + a3 p7
//   z5 =  a6 p4 -    p6          + a5 p7
//   z6 =          a2 p5 + a1 p6  +    p7
//   z7 = -   p4 + a8 p5 - a7 p6
std::array<std::array<KTerm, 3>, 4> core_rows(const ParamVector& a) {
    const Dyadic one(1);
    return {{
        {{{4, -a[3]}, {5, -one}, {7, a[2]}}},
        {{{4, a[5]}, {6, -one}, {7, a[4]}}},
        {{{5, a[1]}, {6, a[0]}, {7, one}}},
        {{{4, -one}, {5, a[7]}, {6, -a[6]}}},
    }};
}

bool coef_shifts(Dyadic c) {
    const Dyadic m = c.abs();
    return m == Dyadic::half() || m == Dyadic(2);
}

Dyadic scale_by(Dyadic coef, Dyadic v) {
    // Restricted coefficient set: negation and one-bit exponent moves only.
    if (coef == Dyadic(1)) return v;
    if (coef == Dyadic(-1)) return -v;
    if (coef == Dyadic(2)) return v.doubled();
    if (coef == Dyadic(-2)) return -v.doubled();
    if (coef == Dyadic::half()) return v.halved();
    if (coef == -Dyadic::half()) return -v.halved();
    throw std::logic_error("coefficient outside the fast-flow set");
}

double scale_by(Dyadic coef, double v) { return coef.value() * v; }

template <typename T>
std::array<T, 8> run_flow(const ParamVector& a, const T* x, CostProfile* cost) {
    // A1: even/odd fold, 8 additions.
    T u[8];
    for (int i = 0; i < 4; ++i) u[i] = x[i] + x[7 - i];
    for (int i = 4; i < 8; ++i) u[i] = x[7 - i] - x[i];
    // A2: fold again on the top half, 4 additions.
    T w[8] = {u[0] + u[3], u[1] + u[2], u[1] - u[2], u[0] - u[3], u[4], u[5], u[6], u[7]};
    if (cost) cost->adds += 12;
    // K(a).
    T z[8];
    z[0] = w[0] + w[1];
    z[1] = w[0] - w[1];
    z[2] = -w[2];
    z[3] = w[3];
    if (cost) cost->adds += 2;
    const auto rows = core_rows(a);
    for (int r = 0; r < 4; ++r) {
        T acc{};
        bool first = true;
        for (const auto& term : rows[r]) {
            if (term.coef.zero()) continue;
            if (cost && coef_shifts(term.coef)) ++cost->shifts;
            const T v = scale_by(term.coef, w[term.src]);
            if (first) {
                acc = v;
                first = false;
            } else {
                acc = acc + v;
                if (cost) ++cost->adds;
            }
        }
        z[4 + r] = acc;
    }
    // P.
    const auto perm = permutation_P();
    std::array<T, 8> y{};
    for (int i = 0; i < 8; ++i) y[perm[i]] = z[i];
    return y;
}

}  // namespace

CostProfile complexity(const ParamVector& a) {
    CostProfile c{22, 0};
    for (const auto& v : a) {
        if (v.zero()) --c.adds;
        if (coef_shifts(v)) ++c.shifts;
    }
    return c;
}

std::array<int, 8> permutation_P() {
    // Cycle decomposition (0)(1 4 3 2 6)(5)(7): stage output i lands on row perm[i].
    return {0, 4, 6, 2, 3, 5, 1, 7};
}

FactoredTransform factor_transform(const ParamVector& a) {
    FactoredTransform f;
    f.a = a;
    f.perm = permutation_P();

    f.butterfly = DyadicMatrix(8, 8);
    for (int i = 0; i < 4; ++i) {
        f.butterfly.set(i, i, 1);
        f.butterfly.set(i, 7 - i, 1);
        f.butterfly.set(4 + i, 3 - i, 1);
        f.butterfly.set(4 + i, 4 + i, -1);
    }

    f.half_butterfly = DyadicMatrix(8, 8);
    for (int i = 0; i < 2; ++i) {
        f.half_butterfly.set(i, i, 1);
        f.half_butterfly.set(i, 3 - i, 1);
        f.half_butterfly.set(2 + i, 1 - i, 1);
        f.half_butterfly.set(2 + i, 2 + i, -1);
    }
    for (int i = 4; i < 8; ++i) f.half_butterfly.set(i, i, 1);

    f.core = DyadicMatrix(8, 8);
    f.core.set(0, 0, 1);
    f.core.set(0, 1, 1);
    f.core.set(1, 0, 1);
    f.core.set(1, 1, -1);
    f.core.set(2, 2, -1);
    f.core.set(3, 3, 1);
    const auto rows = core_rows(a);
    for (int r = 0; r < 4; ++r)
        for (const auto& term : rows[r]) f.core.set(4 + r, term.src, term.coef);
    return f;
}

DyadicMatrix FactoredTransform::compose() const {
    DyadicMatrix p(8, 8);
    for (int i = 0; i < 8; ++i) p.set(perm[i], i, 1);
    return p * core * half_butterfly * butterfly;
}

std::array<Dyadic, 8> apply_fast(const ParamVector& a, std::span<const Dyadic, 8> x) {
    return run_flow<Dyadic>(a, x.data(), nullptr);
}

std::array<Dyadic, 8> apply_fast(const ParamVector& a, std::span<const Dyadic, 8> x,
                                 CostProfile& executed) {
    executed = {};
    return run_flow<Dyadic>(a, x.data(), &executed);
}

void fast_forward8(const ParamVector& a, const double* in, double* out) {
    const auto y = run_flow<double>(a, in, nullptr);
    for (int i = 0; i < 8; ++i) out[i] = y[i];
}

void fast_transposed8(const ParamVector& a, const double* in, double* out) {
    const auto perm = permutation_P();
    // P^T
    double z[8];
    for (int i = 0; i < 8; ++i) z[i] = in[perm[i]];
    // K(a)^T: columns of the 4x4 block become rows.
    double q[8];
    q[0] = z[0] + z[1];
    q[1] = z[0] - z[1];
    q[2] = -z[2];
    q[3] = z[3];
    const double a1 = a[0].value(), a2 = a[1].value(), a3 = a[2].value(), a4 = a[3].value(),
                 a5 = a[4].value(), a6 = a[5].value(), a7 = a[6].value(), a8 = a[7].value();
    q[4] = -a4 * z[4] + a6 * z[5] - z[7];
    q[5] = -z[4] + a2 * z[6] + a8 * z[7];
    q[6] = -z[5] + a1 * z[6] - a7 * z[7];
    q[7] = a3 * z[4] + a5 * z[5] + z[6];
    // A2^T = A2, A1^T = A1 (both stages are symmetric).
    double w[8] = {q[0] + q[3], q[1] + q[2], q[1] - q[2], q[0] - q[3], q[4], q[5], q[6], q[7]};
    for (int i = 0; i < 4; ++i) out[i] = w[i] + w[7 - i];
    for (int i = 4; i < 8; ++i) out[i] = w[7 - i] - w[i];
}

}  // namespace approxdct
