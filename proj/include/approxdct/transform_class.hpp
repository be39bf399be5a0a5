#ifndef APPROXDCT_TRANSFORM_CLASS_HPP
#define APPROXDCT_TRANSFORM_CLASS_HPP

#include <array>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "approxdct/dyadic.hpp"
#include "approxdct/real_matrix.hpp"

namespace approxdct {

inline constexpr int kNumParams = 8;

/// Admissible parameter values {0, ±1/2, ±1, ±2} in ascending numeric order.
const std::array<Dyadic, 7>& param_domain();
bool in_param_domain(Dyadic v);

/// The eight free entries of the parametric transform matrix.
/// Construction rejects components outside the admissible set.
class ParamVector {
public:
    ParamVector() = default;  // all-zero vector (valid)
    explicit ParamVector(const std::array<Dyadic, kNumParams>& a);

    static ParamVector parse(std::string_view text);  // e.g. "1 1/2 1/2 1 1 1/2 1/2 1"

    const Dyadic& operator[](std::size_t i) const { return a_[i]; }
    auto begin() const { return a_.begin(); }
    auto end() const { return a_.end(); }

    friend bool operator==(const ParamVector&, const ParamVector&) = default;
    /// Lexicographic rank with digits in param_domain order; total order over the space.
    unsigned long rank() const;

    std::string str() const;

private:
    std::array<Dyadic, kNumParams> a_{};
};

/// The ten polynomial entries of T*T^T that depend on the parameters.
/// tau[0] ... tau[9] hold tau_1 ... tau_10; the four diagonal ones
/// (tau_1, tau_5, tau_8, tau_10) are 2x^2+2y^2+2 >= 2 for any admissible x, y.
struct TauProfile {
    std::array<Dyadic, 10> tau;
};

DyadicMatrix build_T(const ParamVector& a);
TauProfile tau_profile(const ParamVector& a);

/// True iff the six cross terms tau_2, tau_3, tau_4, tau_6, tau_7, tau_9 vanish,
/// decided in exact dyadic arithmetic.
bool is_orthogonal(const ParamVector& a);

/// Diagonal of the energy-normalizing matrix S = sqrt((T*T^T)^-1) as an N x N matrix.
/// Requires is_orthogonal(a).
RealMatrix scaling_matrix(const ParamVector& a);

/// A low-complexity matrix T together with the diagonal scale S that makes
/// S*T orthonormal, plus its addition/bit-shift cost. Kernels built from a
/// parameter vector or by doubling carry the structure needed for the fast
/// transform path; externally loaded matrices fall back to dense application.
struct TransformKernel {
    DyadicMatrix low;
    std::vector<double> scale;  // diagonal of S
    int adds = 0;
    int shifts = 0;
    std::string label;
    bool orthogonal = false;

    std::optional<ParamVector> param;                  // 8-point class members
    std::shared_ptr<const TransformKernel> jam_base;   // doubled kernels
    std::optional<RealMatrix> dense;                   // exact DCT / dense overrides

    int size() const;
    RealMatrix matrix() const;  // S * T

    std::vector<double> apply(std::span<const double> x) const;          // (S*T) x
    std::vector<double> apply_inverse(std::span<const double> y) const;  // (S*T)^T y

    /// y = T x without the scale; uses the fast flow when the structure is known.
    void apply_low(std::span<const double> x, std::span<double> y) const;
    void apply_low_transposed(std::span<const double> x, std::span<double> y) const;
};

/// Builds the orthonormal kernel S(a) * T(a); requires is_orthogonal(a).
TransformKernel orthonormalize(const ParamVector& a);

/// Exact DCT-II wrapped as a kernel (dense path, unit scale, zero declared cost).
TransformKernel dct_kernel(int n);

std::string serialize_kernel(const TransformKernel& k);
TransformKernel parse_kernel(const std::string& text);

struct OptimalEntry {
    int j;                // row number in the optimal-transform table
    const char* key;      // CLI selector
    const char* label;
    ParamVector a;
};

/// The seven optimal 8-point parameter vectors with their published names.
const std::vector<OptimalEntry>& optimal_table();

/// Kernel for a CLI selector (mrdct, ocbt, j3..j5, rdct, j7, j1/j2/j6 aliases, dct),
/// scaled to the requested size (8, 16 or 32). Empty optional when unknown.
std::optional<TransformKernel> builtin_kernel(std::string_view key, int size = 8);

}  // namespace approxdct

#endif
