#pragma once

#include <algorithm>
#include <concepts>
#include <stdexcept>
#include <vector>

namespace cycliq {

template <typename F>
concept CoefficientField = requires(const F a, const F b) {
    { a + b } -> std::convertible_to<F>;
    { a - b } -> std::convertible_to<F>;
    { a* b } -> std::convertible_to<F>;
    { -a } -> std::convertible_to<F>;
    { a.inverse() } -> std::convertible_to<F>;
    { a.is_zero() } -> std::convertible_to<bool>;
    { F::zero() } -> std::convertible_to<F>;
    { F::one() } -> std::convertible_to<F>;
    { a == b } -> std::convertible_to<bool>;
};

/// Formal power series in t truncated at t^order, coefficients in a
/// pluggable field (rationals at a fixed q, or rational functions of a
/// symbolic q). Arithmetic results carry the minimum operand order.
template <CoefficientField F>
class TruncSeries {
public:
    explicit TruncSeries(long long order)
        : order_(check_order(order)), c_(static_cast<size_t>(order) + 1, F::zero()) {}
    TruncSeries(long long order, std::vector<F> coeffs) : order_(check_order(order)), c_(std::move(coeffs)) {
        if (static_cast<long long>(c_.size()) != order_ + 1)
            throw std::invalid_argument("TruncSeries needs order+1 coefficients");
    }

    static TruncSeries constant(const F& value, long long order) {
        TruncSeries s(order);
        s.c_[0] = value;
        return s;
    }
    static TruncSeries one(long long order) { return constant(F::one(), order); }
    static TruncSeries monomial(const F& value, long long k, long long order) {
        TruncSeries s(order);
        if (k <= order) s.c_[static_cast<size_t>(k)] = value;
        return s;
    }

    long long order() const { return order_; }
    const std::vector<F>& coeffs() const { return c_; }

    const F& coeff(long long n) const {
        if (n < 0 || n > order_) throw std::out_of_range("series coefficient index out of range");
        return c_[static_cast<size_t>(n)];
    }

    TruncSeries truncated(long long new_order) const {
        if (new_order > order_) throw std::out_of_range("cannot extend a truncated series");
        return TruncSeries(new_order, std::vector<F>(c_.begin(), c_.begin() + new_order + 1));
    }

    TruncSeries operator+(const TruncSeries& o) const {
        long long ord = std::min(order_, o.order_);
        std::vector<F> c(static_cast<size_t>(ord) + 1, F::zero());
        for (long long k = 0; k <= ord; ++k) c[k] = c_[k] + o.c_[k];
        return TruncSeries(ord, std::move(c));
    }
    TruncSeries operator-(const TruncSeries& o) const {
        long long ord = std::min(order_, o.order_);
        std::vector<F> c(static_cast<size_t>(ord) + 1, F::zero());
        for (long long k = 0; k <= ord; ++k) c[k] = c_[k] - o.c_[k];
        return TruncSeries(ord, std::move(c));
    }
    TruncSeries operator*(const TruncSeries& o) const {
        long long ord = std::min(order_, o.order_);
        std::vector<F> c(static_cast<size_t>(ord) + 1, F::zero());
        for (long long a = 0; a <= ord; ++a) {
            if (c_[a].is_zero()) continue;
            for (long long b = 0; a + b <= ord; ++b) {
                if (o.c_[b].is_zero()) continue;
                c[a + b] = c[a + b] + c_[a] * o.c_[b];
            }
        }
        return TruncSeries(ord, std::move(c));
    }

    TruncSeries scaled(const F& s) const {
        std::vector<F> c(c_);
        for (auto& x : c) x = x * s;
        return TruncSeries(order_, std::move(c));
    }

    /// Multiply by t^k; terms pushed past the order are dropped.
    TruncSeries shifted(long long k) const {
        TruncSeries s(order_);
        for (long long n = 0; n + k <= order_; ++n) s.c_[static_cast<size_t>(n + k)] = c_[n];
        return s;
    }

    /// Multiplicative inverse up to the order; needs an invertible
    /// constant term.
    TruncSeries reciprocal() const {
        if (c_[0].is_zero())
            throw std::domain_error("series reciprocal needs an invertible constant term");
        F inv0 = c_[0].inverse();
        std::vector<F> b(static_cast<size_t>(order_) + 1, F::zero());
        b[0] = inv0;
        for (long long n = 1; n <= order_; ++n) {
            F acc = F::zero();
            for (long long k = 1; k <= n; ++k) acc = acc + c_[k] * b[n - k];
            b[static_cast<size_t>(n)] = -(inv0 * acc);
        }
        return TruncSeries(order_, std::move(b));
    }

    TruncSeries pow(unsigned long long e) const {
        TruncSeries acc = one(order_);
        TruncSeries base = *this;
        while (e > 0) {
            if (e & 1) acc = acc * base;
            base = base * base;
            e >>= 1;
        }
        return acc;
    }

    bool operator==(const TruncSeries& o) const { return order_ == o.order_ && c_ == o.c_; }
    bool operator!=(const TruncSeries& o) const { return !(*this == o); }

private:
    static long long check_order(long long order) {
        if (order < 0) throw std::invalid_argument("series order must be nonnegative");
        return order;
    }

    long long order_;
    std::vector<F> c_;
};

}  // namespace cycliq
