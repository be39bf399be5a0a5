#ifndef APPROXDCT_SCALING_HPP
#define APPROXDCT_SCALING_HPP

#include <vector>

#include "approxdct/transform_class.hpp"

namespace approxdct {

/// Record of one doubling step.
struct ScaledKernel {
    TransformKernel base;
    TransformKernel result;
    int generation = 1;  // doublings applied relative to the original kernel
};

/// Builds the 2N-point kernel from an orthogonal N-point kernel: an input
/// butterfly pairs x_i with x_{2N-1-i} (2N additions); the base transform is
/// applied to the sums and the differences; even output rows take the sum
/// block and odd rows the difference block, in base-row order. The diagonal
/// scale is recomputed from the doubled matrix. Cost follows
/// adds(2N) = 2 adds(N) + 2N, shifts(2N) = 2 shifts(N).
TransformKernel jam_double(const TransformKernel& base);

/// One doubling for target 16, two for 32, starting from an 8-point kernel.
TransformKernel jam_scale_to(const TransformKernel& base, int target_size);

/// Every doubling step on the way to target_size.
std::vector<ScaledKernel> jam_trace(const TransformKernel& base, int target_size);

}  // namespace approxdct

#endif
