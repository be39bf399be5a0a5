#include "approxdct/transform_class.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "approxdct/fast_algorithm.hpp"
#include "approxdct/scaling.hpp"

namespace approxdct {

namespace {

constexpr double kOrthoTol = 1e-10;

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace

const std::array<Dyadic, 7>& param_domain() {
    static const std::array<Dyadic, 7> domain = {
        Dyadic(-2), Dyadic(-1), -Dyadic::half(), Dyadic(0),
        Dyadic::half(), Dyadic(1), Dyadic(2)};
    return domain;
}

bool in_param_domain(Dyadic v) {
    const auto& d = param_domain();
    return std::find(d.begin(), d.end(), v) != d.end();
}

ParamVector::ParamVector(const std::array<Dyadic, kNumParams>& a) : a_(a) {
    for (const auto& v : a_)
        if (!in_param_domain(v))
            throw std::invalid_argument("parameter " + v.str() +
                                        " outside the admissible set {0, +-1/2, +-1, +-2}");
}

ParamVector ParamVector::parse(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::array<Dyadic, kNumParams> a;
    std::string tok;
    for (auto& v : a) {
        if (!(in >> tok)) throw std::invalid_argument("parameter vector needs 8 components");
        v = parse_dyadic(tok);
    }
    if (in >> tok) throw std::invalid_argument("parameter vector needs exactly 8 components");
    return ParamVector(a);
}

unsigned long ParamVector::rank() const {
    const auto& d = param_domain();
    unsigned long r = 0;
    for (const auto& v : a_) {
        const auto it = std::find(d.begin(), d.end(), v);
        r = r * 7 + static_cast<unsigned long>(it - d.begin());
    }
    return r;
}

std::string ParamVector::str() const {
    std::string s = "[";
    for (std::size_t i = 0; i < a_.size(); ++i) {
        if (i) s += ' ';
        s += a_[i].str();
    }
    return s + "]";
}

DyadicMatrix build_T(const ParamVector& a) {
    const Dyadic one(1), zero(0);
    const Dyadic &a1 = a[0], &a2 = a[1], &a3 = a[2], &a4 = a[3], &a5 = a[4], &a6 = a[5],
                 &a7 = a[6], &a8 = a[7];
    const Dyadic rows[8][8] = {
        {one, one, one, one, one, one, one, one},
        {one, a1, a2, zero, zero, -a2, -a1, -one},
        {one, zero, zero, -one, -one, zero, zero, one},
        {a3, zero, -one, -a4, a4, one, zero, -a3},
        {one, -one, -one, one, one, -one, -one, one},
        {a5, -one, zero, a6, -a6, zero, one, -a5},
        {zero, -one, one, zero, zero, one, -one, zero},
        {zero, -a7, a8, -one, one, -a8, a7, zero},
    };
    DyadicMatrix t(8, 8);
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) t.set(i, j, rows[i][j]);
    return t;
}

TauProfile tau_profile(const ParamVector& a) {
    const Dyadic two(2);
    const Dyadic &a1 = a[0], &a2 = a[1], &a3 = a[2], &a4 = a[3], &a5 = a[4], &a6 = a[5],
                 &a7 = a[6], &a8 = a[7];
    TauProfile p;
    p.tau[0] = two * a1 * a1 + two * a2 * a2 + two;
    p.tau[1] = -(two * a2) + two * a3;
    p.tau[2] = -(two * a1) + two * a5;
    p.tau[3] = -(two * a1 * a7) + two * a2 * a8;
    p.tau[4] = two * a3 * a3 + two * a4 * a4 + two;
    p.tau[5] = two * a3 * a5 - two * a4 * a6;
    p.tau[6] = two * a4 - two * a8;
    p.tau[7] = two * a5 * a5 + two * a6 * a6 + two;
    p.tau[8] = -(two * a6) + two * a7;
    p.tau[9] = two * a7 * a7 + two * a8 * a8 + two;
    return p;
}

bool is_orthogonal(const ParamVector& a) {
    const TauProfile p = tau_profile(a);
    // tau_2, tau_3, tau_4, tau_6, tau_7, tau_9 must vanish; the diagonal
    // tau values are >= 2 for every admissible vector, so nothing else to check.
    return p.tau[1].zero() && p.tau[2].zero() && p.tau[3].zero() && p.tau[5].zero() &&
           p.tau[6].zero() && p.tau[8].zero();
}

RealMatrix scaling_matrix(const ParamVector& a) {
    if (!is_orthogonal(a))
        throw std::invalid_argument("scaling matrix requires an orthogonal parameter vector");
    const TauProfile p = tau_profile(a);
    const double inv2sqrt2 = 1.0 / (2.0 * std::numbers::sqrt2);
    const std::array<double, 8> diag = {
        inv2sqrt2, 1.0 / std::sqrt(p.tau[0].value()), 0.5, 1.0 / std::sqrt(p.tau[4].value()),
        inv2sqrt2, 1.0 / std::sqrt(p.tau[7].value()), 0.5, 1.0 / std::sqrt(p.tau[9].value())};
    return RealMatrix::diagonal(diag);
}

int TransformKernel::size() const { return dense ? dense->rows() : low.rows(); }

RealMatrix TransformKernel::matrix() const {
    if (dense) return *dense;
    RealMatrix m = low.to_real();
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) m.at(i, j) *= scale[i];
    return m;
}

void TransformKernel::apply_low(std::span<const double> x, std::span<double> y) const {
    const int n = size();
    if (static_cast<int>(x.size()) != n || static_cast<int>(y.size()) != n)
        throw std::invalid_argument("kernel apply dimension mismatch");
    if (param) {
        fast_forward8(*param, x.data(), y.data());
        return;
    }
    if (jam_base) {
        const int h = n / 2;
        std::vector<double> u(h), v(h), top(h), bottom(h);
        for (int i = 0; i < h; ++i) {
            u[i] = x[i] + x[n - 1 - i];
            v[i] = x[i] - x[n - 1 - i];
        }
        jam_base->apply_low(u, top);
        jam_base->apply_low(v, bottom);
        for (int k = 0; k < h; ++k) {
            y[2 * k] = top[k];
            y[2 * k + 1] = bottom[k];
        }
        return;
    }
    const RealMatrix m = dense ? *dense : low.to_real();
    const auto r = m.apply(x);
    std::copy(r.begin(), r.end(), y.begin());
}

void TransformKernel::apply_low_transposed(std::span<const double> x, std::span<double> y) const {
    const int n = size();
    if (static_cast<int>(x.size()) != n || static_cast<int>(y.size()) != n)
        throw std::invalid_argument("kernel apply dimension mismatch");
    if (param) {
        fast_transposed8(*param, x.data(), y.data());
        return;
    }
    if (jam_base) {
        const int h = n / 2;
        std::vector<double> even(h), odd(h), p(h), q(h);
        for (int k = 0; k < h; ++k) {
            even[k] = x[2 * k];
            odd[k] = x[2 * k + 1];
        }
        jam_base->apply_low_transposed(even, p);
        jam_base->apply_low_transposed(odd, q);
        for (int i = 0; i < h; ++i) {
            y[i] = p[i] + q[i];
            y[n - 1 - i] = p[i] - q[i];
        }
        return;
    }
    const RealMatrix m = (dense ? *dense : low.to_real()).transposed();
    const auto r = m.apply(x);
    std::copy(r.begin(), r.end(), y.begin());
}

std::vector<double> TransformKernel::apply(std::span<const double> x) const {
    std::vector<double> y(size());
    apply_low(x, y);
    for (int i = 0; i < size(); ++i) y[i] *= scale[i];
    return y;
}

std::vector<double> TransformKernel::apply_inverse(std::span<const double> y) const {
    const int n = size();
    std::vector<double> scaled(n);
    for (int i = 0; i < n; ++i) scaled[i] = scale[i] * y[i];
    std::vector<double> x(n);
    apply_low_transposed(scaled, x);
    return x;
}

TransformKernel orthonormalize(const ParamVector& a) {
    if (!is_orthogonal(a))
        throw std::invalid_argument("orthonormalization requires an orthogonal parameter vector");
    TransformKernel k;
    k.low = build_T(a);
    const RealMatrix s = scaling_matrix(a);
    k.scale.resize(8);
    for (int i = 0; i < 8; ++i) k.scale[i] = s.at(i, i);
    const CostProfile cost = complexity(a);
    k.adds = cost.adds;
    k.shifts = cost.shifts;
    k.orthogonal = true;
    k.param = a;
    k.label = "a=" + a.str();
    for (const auto& entry : optimal_table())
        if (entry.a == a) {
            k.label = entry.label;
            break;
        }
    return k;
}

TransformKernel dct_kernel(int n) {
    TransformKernel k;
    k.dense = dct_matrix(n);
    k.scale.assign(n, 1.0);
    k.orthogonal = true;
    k.label = "DCT";
    if (n != 8) k.label += "@" + std::to_string(n);
    return k;
}

std::string serialize_kernel(const TransformKernel& k) {
    if (k.dense)
        throw std::invalid_argument("dense kernels have no low-complexity serialization");
    const int n = k.size();
    std::ostringstream out;
    out << "approxdct-kernel v1\n";
    out << "label " << k.label << "\n";
    out << "size " << n << "\n";
    out << "adds " << k.adds << "\n";
    out << "shifts " << k.shifts << "\n";
    const TransformKernel* root = &k;
    while (root->jam_base) root = root->jam_base.get();
    if (root->param) {
        out << "param";
        for (const auto& v : *root->param) out << ' ' << v.str();
        out << "\n";
    }
    out << "entries\n";
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) out << (j ? " " : "") << k.low.at(i, j).num_at_exp(1);
        out << "\n";
    }
    // Scale entries as 1/sqrt(g_i) with g_i the exact diagonal of T*T^T.
    out << "scale\n";
    const DyadicMatrix gram = k.low * k.low.transposed();
    for (int i = 0; i < n; ++i)
        out << "1/sqrt(" << gram.at(i, i).str() << ") " << format_double(k.scale[i]) << "\n";
    return out.str();
}

TransformKernel parse_kernel(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line) || line != "approxdct-kernel v1")
        throw std::invalid_argument("unrecognized kernel file header");

    TransformKernel k;
    int n = 0;
    std::optional<ParamVector> param;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string key;
        ls >> key;
        if (key == "label") {
            std::string rest;
            std::getline(ls, rest);
            const auto start = rest.find_first_not_of(' ');
            k.label = start == std::string::npos ? "" : rest.substr(start);
        } else if (key == "size") {
            ls >> n;
        } else if (key == "adds") {
            ls >> k.adds;
        } else if (key == "shifts") {
            ls >> k.shifts;
        } else if (key == "param") {
            std::string rest;
            std::getline(ls, rest);
            param = ParamVector::parse(rest);
        } else if (key == "entries") {
            break;
        } else {
            throw std::invalid_argument("unexpected kernel file field: " + key);
        }
    }
    if (n < 2) throw std::invalid_argument("kernel file missing a valid size");
    k.low = DyadicMatrix(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            long long doubled;
            if (!(in >> doubled)) throw std::invalid_argument("kernel file entries truncated");
            k.low.set(i, j, Dyadic::scaled(doubled, 1));
        }
    in >> line;
    if (line != "scale") throw std::invalid_argument("kernel file missing scale section");
    k.scale.resize(n);
    for (int i = 0; i < n; ++i) {
        std::string expr;
        double decimal;
        if (!(in >> expr >> decimal)) throw std::invalid_argument("kernel file scale truncated");
        double value = decimal;
        if (expr.rfind("1/sqrt(", 0) == 0 && expr.back() == ')') {
            const Dyadic arg = parse_dyadic(expr.substr(7, expr.size() - 8));
            if (arg.num() <= 0) throw std::invalid_argument("scale argument must be positive");
            value = 1.0 / std::sqrt(arg.value());
            if (std::abs(value - decimal) > 1e-12)
                throw std::invalid_argument("kernel scale expression disagrees with its decimal");
        } else if (!(decimal > 0.0)) {
            throw std::invalid_argument("kernel scale entries must be positive");
        }
        k.scale[i] = value;
    }

    if (param) {
        TransformKernel rebuilt = orthonormalize(*param);
        if (n != 8) rebuilt = jam_scale_to(rebuilt, n);
        if (!(rebuilt.low == k.low))
            throw std::invalid_argument("kernel entries disagree with the stated parameter vector");
        rebuilt.label = k.label;
        rebuilt.adds = k.adds;
        rebuilt.shifts = k.shifts;
        rebuilt.scale = k.scale;
        k = std::move(rebuilt);
    }

    const RealMatrix m = k.matrix();
    const RealMatrix residual = m * m.transposed() - RealMatrix::identity(n);
    double worst = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) worst = std::max(worst, std::abs(residual.at(i, j)));
    k.orthogonal = worst < kOrthoTol;
    return k;
}

const std::vector<OptimalEntry>& optimal_table() {
    static const std::vector<OptimalEntry> table = [] {
        const Dyadic z(0), o(1), h = Dyadic::half();
        std::vector<OptimalEntry> t;
        t.push_back({1, "mrdct", "MRDCT", ParamVector({z, z, z, z, z, z, z, z})});
        t.push_back({2, "ocbt", "OCBT", ParamVector({o, z, z, z, o, z, z, z})});
        t.push_back({3, "j3", "new-j3", ParamVector({o, z, z, o, o, z, z, o})});
        t.push_back({4, "j4", "new-j4", ParamVector({o, z, z, h, o, z, z, h})});
        t.push_back({5, "j5", "new-j5", ParamVector({o, o, o, -o, o, -o, -o, -o})});
        t.push_back({6, "rdct", "RDCT", ParamVector({o, o, o, o, o, o, o, o})});
        t.push_back({7, "j7", "new-j7", ParamVector({o, h, h, o, o, h, h, o})});
        return t;
    }();
    return table;
}

std::optional<TransformKernel> builtin_kernel(std::string_view key, int size) {
    std::string lower(key);
    std::transform(lower.begin(), lower.end(), lower.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    if (size != 8 && size != 16 && size != 32) return std::nullopt;
    if (lower == "dct") return dct_kernel(size);
    for (const auto& entry : optimal_table()) {
        const std::string alias = "j" + std::to_string(entry.j);
        if (lower == entry.key || lower == alias) {
            TransformKernel k = orthonormalize(entry.a);
            if (size != 8) k = jam_scale_to(k, size);
            return k;
        }
    }
    return std::nullopt;
}

}  // namespace approxdct
