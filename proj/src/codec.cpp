#include "approxdct/codec.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>
#include <thread>

#include "approxdct/quality.hpp"

namespace approxdct {

namespace {

std::string fmt(double v) {
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

GrayImage pad_to_multiple(const GrayImage& img, int n) {
    const int w = (img.width + n - 1) / n * n;
    const int h = (img.height + n - 1) / n * n;
    GrayImage out(w, h);
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x)
            out.at(y, x) = img.at(std::min(y, img.height - 1), std::min(x, img.width - 1));
    return out;
}

}  // namespace

std::vector<std::pair<int, int>> zigzag_order(int n) {
    if (n < 1) throw std::invalid_argument("zig-zag size must be positive");
    std::vector<std::pair<int, int>> order;
    order.reserve(static_cast<std::size_t>(n) * n);
    for (int d = 0; d <= 2 * n - 2; ++d) {
        const int lo = std::max(0, d - n + 1), hi = std::min(d, n - 1);
        if (d % 2 == 1)
            for (int i = lo; i <= hi; ++i) order.emplace_back(i, d - i);
        else
            for (int i = hi; i >= lo; --i) order.emplace_back(i, d - i);
    }
    return order;
}

RealMatrix forward_block(const TransformKernel& kernel, const RealMatrix& block) {
    const int n = kernel.size();
    if (block.rows() != n || block.cols() != n)
        throw std::invalid_argument("block size does not match the kernel");
    std::vector<double> col(n), row(n);
    RealMatrix tmp(n, n), out(n, n);
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < n; ++i) col[i] = block.at(i, j);
        const auto y = kernel.apply(col);
        for (int i = 0; i < n; ++i) tmp.at(i, j) = y[i];
    }
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) row[j] = tmp.at(i, j);
        const auto y = kernel.apply(row);
        for (int j = 0; j < n; ++j) out.at(i, j) = y[j];
    }
    return out;
}

RealMatrix inverse_block(const TransformKernel& kernel, const RealMatrix& coeffs) {
    const int n = kernel.size();
    if (coeffs.rows() != n || coeffs.cols() != n)
        throw std::invalid_argument("block size does not match the kernel");
    std::vector<double> col(n), row(n);
    RealMatrix tmp(n, n), out(n, n);
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < n; ++i) col[i] = coeffs.at(i, j);
        const auto y = kernel.apply_inverse(col);
        for (int i = 0; i < n; ++i) tmp.at(i, j) = y[i];
    }
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) row[j] = tmp.at(i, j);
        const auto y = kernel.apply_inverse(row);
        for (int j = 0; j < n; ++j) out.at(i, j) = y[j];
    }
    return out;
}

RealMatrix truncate(const RealMatrix& coeffs, int retained) {
    const int n = coeffs.rows();
    if (coeffs.cols() != n) throw std::invalid_argument("coefficient block must be square");
    if (retained < 1 || retained > n * n)
        throw std::invalid_argument("retained count must be in [1, N^2]");
    RealMatrix out = coeffs;
    const auto order = zigzag_order(n);
    for (std::size_t k = retained; k < order.size(); ++k)
        out.at(order[k].first, order[k].second) = 0.0;
    return out;
}

GrayImage compress_image(const GrayImage& img, const TransformKernel& kernel,
                         const CompressionConfig& cfg) {
    const int n = cfg.block_size;
    if (kernel.size() != n) throw std::invalid_argument("kernel size does not match block size");
    if (cfg.retained < 1 || cfg.retained > n * n)
        throw std::invalid_argument("retained count must be in [1, N^2]");
    if (img.width <= 0 || img.height <= 0) throw std::invalid_argument("empty image");

    const bool needs_pad = img.width % n != 0 || img.height % n != 0;
    if (needs_pad && !cfg.pad)
        throw std::invalid_argument("image dimensions are not a multiple of the block size");
    const GrayImage& src = needs_pad ? pad_to_multiple(img, n) : img;

    GrayImage out(img.width, img.height);
    RealMatrix block(n, n);
    for (int by = 0; by < src.height; by += n)
        for (int bx = 0; bx < src.width; bx += n) {
            for (int y = 0; y < n; ++y)
                for (int x = 0; x < n; ++x)
                    block.at(y, x) = static_cast<double>(src.at(by + y, bx + x)) - 128.0;
            const RealMatrix rec =
                inverse_block(kernel, truncate(forward_block(kernel, block), cfg.retained));
            for (int y = 0; y < n; ++y) {
                if (by + y >= img.height) break;
                for (int x = 0; x < n; ++x) {
                    if (bx + x >= img.width) break;
                    const double v = std::round(rec.at(y, x) + 128.0);
                    out.at(by + y, bx + x) =
                        static_cast<std::uint8_t>(std::clamp(v, 0.0, 255.0));
                }
            }
        }
    return out;
}

std::vector<RateQualityRow> batch_run(const std::vector<GrayImage>& corpus,
                                      const std::vector<TransformKernel>& kernels,
                                      const std::vector<int>& retained_values,
                                      int block_size, int workers) {
    if (corpus.empty()) throw std::invalid_argument("empty image corpus");
    if (kernels.empty()) throw std::invalid_argument("no kernels to evaluate");
    if (retained_values.empty()) throw std::invalid_argument("no retained counts to evaluate");
    if (workers < 1) throw std::invalid_argument("worker count must be positive");
    for (const auto& k : kernels)
        if (k.size() != block_size)
            throw std::invalid_argument("kernel " + k.label + " does not match the block size");

    struct Task {
        std::size_t kernel;
        std::size_t r;
    };
    std::vector<Task> tasks;
    for (std::size_t k = 0; k < kernels.size(); ++k)
        for (std::size_t r = 0; r < retained_values.size(); ++r) tasks.push_back({k, r});

    std::vector<RateQualityRow> rows(tasks.size());
    const auto run_task = [&](const Task& t, RateQualityRow& row) {
        const TransformKernel& kernel = kernels[t.kernel];
        const int retained = retained_values[t.r];
        CompressionConfig cfg{block_size, retained, false};
        double psnr_sum = 0.0, ssim_sum = 0.0;
        for (const auto& img : corpus) {  // fixed order keeps the means reproducible
            const GrayImage rec = compress_image(img, kernel, cfg);
            psnr_sum += psnr(img, rec);
            ssim_sum += ssim(img, rec);
        }
        row.kernel = kernel.label;
        row.block_size = block_size;
        row.retained = retained;
        row.rate = static_cast<double>(retained) / (block_size * block_size);
        row.psnr_db = psnr_sum / static_cast<double>(corpus.size());
        row.ssim = ssim_sum / static_cast<double>(corpus.size());
        const double adds = kernel.adds;
        row.psnr_per_add = row.psnr_db / adds;
        row.ssim_per_add = row.ssim / adds;
    };

    if (workers == 1) {
        for (std::size_t i = 0; i < tasks.size(); ++i) run_task(tasks[i], rows[i]);
    } else {
        std::vector<std::thread> pool;
        const std::size_t chunk = (tasks.size() + workers - 1) / workers;
        for (int w = 0; w < workers; ++w) {
            const std::size_t begin = std::min(static_cast<std::size_t>(w) * chunk, tasks.size());
            const std::size_t end = std::min(begin + chunk, tasks.size());
            pool.emplace_back([&, begin, end] {
                for (std::size_t i = begin; i < end; ++i) run_task(tasks[i], rows[i]);
            });
        }
        for (auto& t : pool) t.join();
    }
    return rows;
}

std::string rate_quality_csv(const std::vector<RateQualityRow>& rows) {
    std::string out = "kernel,N,r,rate,psnr_db,ssim,psnr_per_add,ssim_per_add\n";
    for (const auto& r : rows) {
        out += r.kernel + "," + std::to_string(r.block_size) + "," + std::to_string(r.retained) +
               "," + fmt(r.rate) + "," + fmt(r.psnr_db) + "," + fmt(r.ssim) + "," +
               fmt(r.psnr_per_add) + "," + fmt(r.ssim_per_add) + "\n";
    }
    return out;
}

}  // namespace approxdct
