#include "approxdct/quality.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace approxdct {

namespace {

constexpr int kWindow = 11;
constexpr double kSigma = 1.5;
constexpr double kC1 = (0.01 * 255) * (0.01 * 255);
constexpr double kC2 = (0.03 * 255) * (0.03 * 255);

std::array<double, kWindow> gaussian_taps() {
    std::array<double, kWindow> g{};
    double sum = 0.0;
    for (int i = 0; i < kWindow; ++i) {
        const double d = i - (kWindow - 1) / 2.0;
        g[i] = std::exp(-d * d / (2.0 * kSigma * kSigma));
        sum += g[i];
    }
    for (auto& v : g) v /= sum;
    return g;
}

// Separable valid-region Gaussian filter: (h x w) -> (h-10 x w-10).
std::vector<double> filter_valid(const std::vector<double>& plane, int w, int h) {
    static const auto taps = gaussian_taps();
    const int vw = w - kWindow + 1;
    std::vector<double> horiz(static_cast<std::size_t>(h) * vw);
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < vw; ++x) {
            double acc = 0.0;
            for (int t = 0; t < kWindow; ++t) acc += taps[t] * plane[y * w + x + t];
            horiz[y * vw + x] = acc;
        }
    const int vh = h - kWindow + 1;
    std::vector<double> out(static_cast<std::size_t>(vh) * vw);
    for (int y = 0; y < vh; ++y)
        for (int x = 0; x < vw; ++x) {
            double acc = 0.0;
            for (int t = 0; t < kWindow; ++t) acc += taps[t] * horiz[(y + t) * vw + x];
            out[y * vw + x] = acc;
        }
    return out;
}

void require_same_dims(const GrayImage& a, const GrayImage& b) {
    if (a.width != b.width || a.height != b.height)
        throw std::invalid_argument("image dimensions differ");
}

}  // namespace

double psnr(const GrayImage& ref, const GrayImage& test) {
    require_same_dims(ref, test);
    double sum = 0.0;
    for (std::size_t i = 0; i < ref.samples.size(); ++i) {
        const double d = static_cast<double>(ref.samples[i]) - test.samples[i];
        sum += d * d;
    }
    if (sum == 0.0) return std::numeric_limits<double>::infinity();
    const double mse = sum / static_cast<double>(ref.samples.size());
    return 10.0 * std::log10(255.0 * 255.0 / mse);
}

double ssim(const GrayImage& ref, const GrayImage& test) {
    require_same_dims(ref, test);
    if (ref.width < kWindow || ref.height < kWindow)
        throw std::invalid_argument("image too small for the 11x11 SSIM window");

    const int w = ref.width, h = ref.height;
    const std::size_t count = ref.samples.size();
    std::vector<double> x(count), y(count), xx(count), yy(count), xy(count);
    for (std::size_t i = 0; i < count; ++i) {
        x[i] = ref.samples[i];
        y[i] = test.samples[i];
        xx[i] = x[i] * x[i];
        yy[i] = y[i] * y[i];
        xy[i] = x[i] * y[i];
    }
    const auto mu1 = filter_valid(x, w, h);
    const auto mu2 = filter_valid(y, w, h);
    const auto sxx = filter_valid(xx, w, h);
    const auto syy = filter_valid(yy, w, h);
    const auto sxy = filter_valid(xy, w, h);

    double total = 0.0;
    for (std::size_t i = 0; i < mu1.size(); ++i) {
        const double m1 = mu1[i], m2 = mu2[i];
        const double var1 = sxx[i] - m1 * m1;
        const double var2 = syy[i] - m2 * m2;
        const double cov = sxy[i] - m1 * m2;
        total += ((2.0 * m1 * m2 + kC1) * (2.0 * cov + kC2)) /
                 ((m1 * m1 + m2 * m2 + kC1) * (var1 + var2 + kC2));
    }
    return total / static_cast<double>(mu1.size());
}

}  // namespace approxdct
