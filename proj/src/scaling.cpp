#include "approxdct/scaling.hpp"

#include <cmath>
#include <memory>
#include <stdexcept>

namespace approxdct {

TransformKernel jam_double(const TransformKernel& base) {
    if (!base.orthogonal)
        throw std::invalid_argument("doubling requires an orthogonal base kernel");
    if (base.dense)
        throw std::invalid_argument("doubling requires a low-complexity (non-dense) kernel");
    const int n = base.size();
    const int n2 = 2 * n;

    // Even rows mirror the base row, odd rows mirror with a sign flip:
    // row 2k = [t_k | reverse(t_k)], row 2k+1 = [t_k | -reverse(t_k)].
    TransformKernel out;
    out.low = DyadicMatrix(n2, n2);
    for (int k = 0; k < n; ++k)
        for (int j = 0; j < n; ++j) {
            const Dyadic v = base.low.at(k, j);
            out.low.set(2 * k, j, v);
            out.low.set(2 * k, n2 - 1 - j, v);
            out.low.set(2 * k + 1, j, v);
            out.low.set(2 * k + 1, n2 - 1 - j, -v);
        }

    const DyadicMatrix gram = out.low * out.low.transposed();
    if (!gram.is_diagonal())
        throw std::logic_error("doubled matrix lost orthogonality");
    out.scale.resize(n2);
    for (int i = 0; i < n2; ++i) out.scale[i] = 1.0 / std::sqrt(gram.at(i, i).value());

    out.adds = 2 * base.adds + n2;
    out.shifts = 2 * base.shifts;
    out.orthogonal = true;
    out.jam_base = std::make_shared<TransformKernel>(base);
    const auto cut = base.label.find('@');
    out.label = base.label.substr(0, cut) + "@" + std::to_string(n2);
    return out;
}

TransformKernel jam_scale_to(const TransformKernel& base, int target_size) {
    if (base.size() != 8)
        throw std::invalid_argument("scaling starts from an 8-point kernel");
    if (target_size != 16 && target_size != 32)
        throw std::invalid_argument("supported scaled sizes are 16 and 32");
    TransformKernel k = jam_double(base);
    if (target_size == 32) k = jam_double(k);
    return k;
}

std::vector<ScaledKernel> jam_trace(const TransformKernel& base, int target_size) {
    if (base.size() != 8)
        throw std::invalid_argument("scaling starts from an 8-point kernel");
    if (target_size != 16 && target_size != 32)
        throw std::invalid_argument("supported scaled sizes are 16 and 32");
    std::vector<ScaledKernel> steps;
    TransformKernel current = base;
    int generation = 0;
    while (current.size() < target_size) {
        TransformKernel next = jam_double(current);
        ++generation;
        steps.push_back({current, next, generation});
        current = std::move(next);
    }
    return steps;
}

}  // namespace approxdct
