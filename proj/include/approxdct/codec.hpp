#ifndef APPROXDCT_CODEC_HPP
#define APPROXDCT_CODEC_HPP

#include <string>
#include <utility>
#include <vector>

#include "approxdct/image.hpp"
#include "approxdct/real_matrix.hpp"
#include "approxdct/transform_class.hpp"

namespace approxdct {

struct CompressionConfig {
    int block_size = 8;   // 8, 16 or 32
    int retained = 64;    // zig-zag leading coefficients kept, 1..N^2
    bool pad = false;     // edge-replicate to a block multiple instead of rejecting
};

/// Anti-diagonal scan coordinates covering all N^2 cells, JPEG convention.
std::vector<std::pair<int, int>> zigzag_order(int n);

RealMatrix forward_block(const TransformKernel& kernel, const RealMatrix& block);
RealMatrix inverse_block(const TransformKernel& kernel, const RealMatrix& coeffs);

/// Zeroes every coefficient at zig-zag position >= retained; the kept cells
/// are copied bit-identically.
RealMatrix truncate(const RealMatrix& coeffs, int retained);

/// Blockwise forward -> truncate -> inverse -> reassemble. Pixels are centered
/// by -128 before the transform; rounding (half away from zero) and clamping
/// to [0,255] happen once, at reassembly.
GrayImage compress_image(const GrayImage& img, const TransformKernel& kernel,
                         const CompressionConfig& cfg);

struct RateQualityRow {
    std::string kernel;
    int block_size = 0;
    int retained = 0;
    double rate = 0.0;  // retained / N^2
    double psnr_db = 0.0;
    double ssim = 0.0;
    double psnr_per_add = 0.0;
    double ssim_per_add = 0.0;
};

/// Mean PSNR/SSIM over the corpus for each (kernel, retained) pair, with
/// per-addition normalized columns. Accumulation order is fixed, so results
/// do not depend on the worker count.
std::vector<RateQualityRow> batch_run(const std::vector<GrayImage>& corpus,
                                      const std::vector<TransformKernel>& kernels,
                                      const std::vector<int>& retained_values,
                                      int block_size, int workers = 1);

std::string rate_quality_csv(const std::vector<RateQualityRow>& rows);

}  // namespace approxdct

#endif
