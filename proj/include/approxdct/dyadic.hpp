#ifndef APPROXDCT_DYADIC_HPP
#define APPROXDCT_DYADIC_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace approxdct {

class RealMatrix;

/// Exact dyadic rational k * 2^-e, kept normalized (k odd or zero, e >= 0).
/// Sums, differences and products of dyadic values never round.
class Dyadic {
public:
    constexpr Dyadic() = default;
    constexpr Dyadic(long long units) : num_(units) {}

    static constexpr Dyadic scaled(long long num, int exp) {
        Dyadic d;
        d.num_ = num;
        d.exp_ = exp;
        d.normalize();
        return d;
    }
    static constexpr Dyadic half() { return scaled(1, 1); }

    constexpr long long num() const { return num_; }
    constexpr int exp() const { return exp_; }
    constexpr bool zero() const { return num_ == 0; }
    double value() const;

    constexpr Dyadic operator-() const { return scaled(-num_, exp_); }
    constexpr Dyadic doubled() const {
        return exp_ > 0 ? scaled(num_, exp_ - 1) : Dyadic(num_ * 2);
    }
    constexpr Dyadic halved() const { return scaled(num_, exp_ + 1); }
    constexpr Dyadic abs() const { return num_ < 0 ? -*this : *this; }

    friend constexpr Dyadic operator+(Dyadic a, Dyadic b) {
        const int e = a.exp_ > b.exp_ ? a.exp_ : b.exp_;
        return scaled((a.num_ << (e - a.exp_)) + (b.num_ << (e - b.exp_)), e);
    }
    friend constexpr Dyadic operator-(Dyadic a, Dyadic b) { return a + (-b); }
    friend constexpr Dyadic operator*(Dyadic a, Dyadic b) {
        return scaled(a.num_ * b.num_, a.exp_ + b.exp_);
    }
    friend constexpr bool operator==(Dyadic a, Dyadic b) {
        return a.num_ == b.num_ && a.exp_ == b.exp_;
    }

    /// Numerator at a forced exponent; throws if the value needs more bits.
    long long num_at_exp(int exp) const;

    std::string str() const;  // "3/4", "-1/2", "2"

private:
    long long num_ = 0;
    int exp_ = 0;

    constexpr void normalize() {
        if (num_ == 0) {
            exp_ = 0;
            return;
        }
        while (exp_ > 0 && (num_ & 1) == 0) {
            num_ >>= 1;
            --exp_;
        }
    }
};

Dyadic parse_dyadic(std::string_view text);

/// Integer grid scaled by a single power of two: value(i,j) = raw(i,j) * 2^-scale_exp.
/// The exponent is kept minimal, so equal matrices compare equal field-wise.
class DyadicMatrix {
public:
    DyadicMatrix() = default;
    DyadicMatrix(int rows, int cols);
    static DyadicMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    int scale_exp() const { return scale_exp_; }

    long long raw(int i, int j) const { return raw_[idx(i, j)]; }
    Dyadic at(int i, int j) const { return Dyadic::scaled(raw_[idx(i, j)], scale_exp_); }
    void set(int i, int j, Dyadic v);

    DyadicMatrix operator*(const DyadicMatrix& rhs) const;
    DyadicMatrix transposed() const;
    friend bool operator==(const DyadicMatrix& a, const DyadicMatrix& b);

    bool is_diagonal() const;
    std::vector<Dyadic> diagonal() const;

    RealMatrix to_real() const;

private:
    int rows_ = 0;
    int cols_ = 0;
    int scale_exp_ = 0;
    std::vector<long long> raw_;

    std::size_t idx(int i, int j) const;
    void minimize();
};

}  // namespace approxdct

#endif
