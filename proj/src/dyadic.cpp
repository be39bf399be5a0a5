#include "approxdct/dyadic.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>

#include "approxdct/real_matrix.hpp"

namespace approxdct {

double Dyadic::value() const { return std::ldexp(static_cast<double>(num_), -exp_); }

long long Dyadic::num_at_exp(int exp) const {
    if (exp < exp_) throw std::invalid_argument("dyadic value not representable at exponent");
    return num_ << (exp - exp_);
}

std::string Dyadic::str() const {
    if (exp_ == 0) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(1LL << exp_);
}

Dyadic parse_dyadic(std::string_view text) {
    const std::string s(text);
    std::size_t pos = 0;
    if (const auto slash = s.find('/'); slash != std::string::npos) {
        const long long num = std::stoll(s.substr(0, slash), &pos);
        if (pos != slash) throw std::invalid_argument("bad dyadic literal: " + s);
        const long long den = std::stoll(s.substr(slash + 1), &pos);
        if (pos != s.size() - slash - 1 || den <= 0 || (den & (den - 1)) != 0)
            throw std::invalid_argument("dyadic denominator must be a power of two: " + s);
        int e = 0;
        for (long long d = den; d > 1; d >>= 1) ++e;
        return Dyadic::scaled(num, e);
    }
    if (s.find('.') != std::string::npos) {
        const double v = std::stod(s, &pos);
        if (pos != s.size()) throw std::invalid_argument("bad dyadic literal: " + s);
        double scaled = v;
        for (int e = 0; e <= 16; ++e) {
            if (scaled == std::floor(scaled))
                return Dyadic::scaled(static_cast<long long>(scaled), e);
            scaled *= 2.0;
        }
        throw std::invalid_argument("not a dyadic value: " + s);
    }
    const long long v = std::stoll(s, &pos);
    if (pos != s.size()) throw std::invalid_argument("bad dyadic literal: " + s);
    return Dyadic(v);
}

DyadicMatrix::DyadicMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), raw_(static_cast<std::size_t>(rows) * cols, 0) {
    if (rows <= 0 || cols <= 0) throw std::invalid_argument("matrix dimensions must be positive");
}

DyadicMatrix DyadicMatrix::identity(int n) {
    DyadicMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.raw_[m.idx(i, i)] = 1;
    return m;
}

std::size_t DyadicMatrix::idx(int i, int j) const {
    if (i < 0 || i >= rows_ || j < 0 || j >= cols_)
        throw std::out_of_range("matrix index out of range");
    return static_cast<std::size_t>(i) * cols_ + j;
}

void DyadicMatrix::set(int i, int j, Dyadic v) {
    const std::size_t k = idx(i, j);
    if (v.exp() > scale_exp_) {
        const int grow = v.exp() - scale_exp_;
        for (auto& r : raw_) r <<= grow;
        scale_exp_ = v.exp();
    }
    raw_[k] = v.num_at_exp(scale_exp_);
    minimize();
}

void DyadicMatrix::minimize() {
    while (scale_exp_ > 0) {
        bool all_even = true;
        for (const auto r : raw_)
            if (r & 1) {
                all_even = false;
                break;
            }
        if (!all_even) return;
        for (auto& r : raw_) r >>= 1;
        --scale_exp_;
    }
}

DyadicMatrix DyadicMatrix::operator*(const DyadicMatrix& rhs) const {
    if (cols_ != rhs.rows_) throw std::invalid_argument("matrix product dimension mismatch");
    DyadicMatrix out(rows_, rhs.cols_);
    out.scale_exp_ = scale_exp_ + rhs.scale_exp_;
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < rhs.cols_; ++j) {
            long long acc = 0;
            for (int k = 0; k < cols_; ++k) acc += raw(i, k) * rhs.raw(k, j);
            out.raw_[out.idx(i, j)] = acc;
        }
    out.minimize();
    return out;
}

DyadicMatrix DyadicMatrix::transposed() const {
    DyadicMatrix out(cols_, rows_);
    out.scale_exp_ = scale_exp_;
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) out.raw_[out.idx(j, i)] = raw(i, j);
    return out;
}

bool operator==(const DyadicMatrix& a, const DyadicMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.scale_exp_ == b.scale_exp_ &&
           a.raw_ == b.raw_;
}

bool DyadicMatrix::is_diagonal() const {
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if (i != j && raw(i, j) != 0) return false;
    return true;
}

std::vector<Dyadic> DyadicMatrix::diagonal() const {
    std::vector<Dyadic> d;
    const int n = rows_ < cols_ ? rows_ : cols_;
    d.reserve(n);
    for (int i = 0; i < n; ++i) d.push_back(at(i, i));
    return d;
}

RealMatrix DyadicMatrix::to_real() const {
    RealMatrix out(rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            out.at(i, j) = std::ldexp(static_cast<double>(raw(i, j)), -scale_exp_);
    return out;
}

}  // namespace approxdct
