#ifndef APPROXDCT_QUALITY_HPP
#define APPROXDCT_QUALITY_HPP

#include "approxdct/image.hpp"

namespace approxdct {

/// 10*log10(255^2 / mean squared pixel error); +infinity for identical images.
double psnr(const GrayImage& ref, const GrayImage& test);

/// Mean structural similarity with the reference parameters: 11x11 Gaussian
/// window (sigma 1.5), C1 = (0.01*255)^2, C2 = (0.03*255)^2, windows fully
/// inside the image. Requires min(width, height) >= 11.
double ssim(const GrayImage& ref, const GrayImage& test);

}  // namespace approxdct

#endif
