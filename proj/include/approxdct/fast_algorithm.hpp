#ifndef APPROXDCT_FAST_ALGORITHM_HPP
#define APPROXDCT_FAST_ALGORITHM_HPP

#include <array>
#include <span>

#include "approxdct/dyadic.hpp"
#include "approxdct/transform_class.hpp"

namespace approxdct {

struct CostProfile {
    int adds = 0;
    int shifts = 0;
    friend bool operator==(const CostProfile&, const CostProfile&) = default;
};

/// Addition and bit-shift counts of the fast transform:
/// adds = 22 minus the number of zero parameters,
/// shifts = number of parameters with |a_i| in {1/2, 2}.
CostProfile complexity(const ParamVector& a);

/// Output-row permutation of the factorization T = P * K * A2 * A1.
/// perm[i] is the row receiving stage output i; fixed points 0, 5, 7,
/// five-cycle on {1, 2, 3, 4, 6}.
std::array<int, 8> permutation_P();

/// The sparse factor stages as explicit matrices (for verification and tooling).
struct FactoredTransform {
    ParamVector a;
    DyadicMatrix butterfly;       // A1: 8-point even/odd split, 8 additions
    DyadicMatrix half_butterfly;  // A2: 4-point split on the top half, 4 additions
    DyadicMatrix core;            // K(a): the only parameter-dependent stage
    std::array<int, 8> perm;      // P as a row permutation

    DyadicMatrix compose() const;  // P * K * A2 * A1
};

FactoredTransform factor_transform(const ParamVector& a);

/// Evaluates y = T(a) x exactly using only additions, negations and one-bit
/// shifts. The overload with a CostProfile reports the operations the flow
/// actually executed (coefficient-structural, independent of the data).
std::array<Dyadic, 8> apply_fast(const ParamVector& a, std::span<const Dyadic, 8> x);
std::array<Dyadic, 8> apply_fast(const ParamVector& a, std::span<const Dyadic, 8> x,
                                 CostProfile& executed);

// Double-precision flows used by the block codec; exact for dyadic data.
void fast_forward8(const ParamVector& a, const double* in, double* out);
void fast_transposed8(const ParamVector& a, const double* in, double* out);

}  // namespace approxdct

#endif
