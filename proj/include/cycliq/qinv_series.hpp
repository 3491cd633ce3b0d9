#pragma once

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "cycliq/qrational_function.hpp"
#include "cycliq/rational.hpp"

namespace cycliq {

/// Truncated expansion at q = infinity: a power series in u = 1/q,
/// f(q) = sum coeffs[k] * q^-(offset+k) + O(q^-(order+1)).
class QinvSeries {
public:
    QinvSeries(long long offset, long long order, std::vector<BigRational> coeffs)
        : offset_(offset), order_(order), c_(std::move(coeffs)) {
        long long want = order_ - offset_ + 1;
        if (want < 0) want = 0;
        if (static_cast<long long>(c_.size()) != want)
            throw std::invalid_argument("QinvSeries coefficient count does not match offset/order");
    }

    static QinvSeries zero(long long order) {
        return QinvSeries(0, order, std::vector<BigRational>(static_cast<size_t>(order) + 1,
                                                             BigRational::zero()));
    }

    long long offset() const { return offset_; }
    long long order() const { return order_; }

    /// Coefficient of q^-k; exponents below the offset are exact zeros,
    /// exponents beyond the truncation order are unknown.
    BigRational coeff(long long k) const {
        if (k > order_) throw std::out_of_range("QinvSeries coefficient beyond truncation order");
        if (k < offset_) return BigRational::zero();
        return c_[static_cast<size_t>(k - offset_)];
    }

    /// Coefficients of q^0 .. q^-order, zeros padded below the offset.
    std::vector<BigRational> dense() const {
        std::vector<BigRational> out;
        for (long long k = 0; k <= order_; ++k) out.push_back(coeff(k));
        return out;
    }

    QinvSeries truncated(long long new_order) const {
        if (new_order > order_) throw std::out_of_range("cannot extend a truncated series");
        if (new_order < offset_) return QinvSeries(new_order, new_order, {});
        std::vector<BigRational> c(c_.begin(), c_.begin() + static_cast<size_t>(new_order - offset_ + 1));
        return QinvSeries(offset_, new_order, std::move(c));
    }

    QinvSeries operator*(const QinvSeries& o) const {
        long long off = offset_ + o.offset_;
        long long ord = std::min(order_ + o.offset_, o.order_ + offset_);
        if (ord < off) return QinvSeries(off, ord, {});
        std::vector<BigRational> c(static_cast<size_t>(ord - off + 1), BigRational::zero());
        for (size_t a = 0; a < c_.size(); ++a) {
            if (c_[a].is_zero()) continue;
            for (size_t b = 0; b < o.c_.size() && a + b < c.size(); ++b)
                c[a + b] += c_[a] * o.c_[b];
        }
        return QinvSeries(off, ord, std::move(c));
    }

    QinvSeries operator+(const QinvSeries& o) const {
        long long off = std::min(offset_, o.offset_);
        long long ord = std::min(order_, o.order_);
        if (ord < off) return QinvSeries(off, ord, {});
        std::vector<BigRational> c(static_cast<size_t>(ord - off + 1), BigRational::zero());
        for (long long k = off; k <= ord; ++k) {
            if (k >= offset_) c[static_cast<size_t>(k - off)] += coeff(k);
            if (k >= o.offset_) c[static_cast<size_t>(k - off)] += o.coeff(k);
        }
        return QinvSeries(off, ord, std::move(c));
    }

    /// Substitute a numeric q into the truncated series.
    BigRational eval(const BigRational& q0) const {
        BigRational acc = BigRational::zero();
        BigRational u = q0.inverse();
        for (long long k = order_; k >= offset_; --k) acc = acc * u + coeff(k);
        return acc * u.pow(offset_);
    }

    /// Same function up to the shared truncation order.
    bool operator==(const QinvSeries& o) const {
        if (order_ != o.order_) return false;
        for (long long k = std::min(offset_, o.offset_); k <= order_; ++k)
            if (coeff(k) != o.coeff(k)) return false;
        return true;
    }
    bool operator!=(const QinvSeries& o) const { return !(*this == o); }

private:
    long long offset_;
    long long order_;
    std::vector<BigRational> c_;
};

/// Expand a rational function of q as a series in u = 1/q.
/// Requires deg(num) <= deg(den); otherwise f grows with q and has no
/// expansion at q = infinity.
inline QinvSeries laurent_expand(const QRationalFunction& f, long long order) {
    if (order < 0) throw std::invalid_argument("laurent_expand needs a nonnegative order");
    if (f.is_zero()) return QinvSeries::zero(order);
    long long dn = f.num().degree();
    long long dd = f.den().degree();
    long long offset = dd - dn;
    if (offset < 0)
        throw std::domain_error("rational function grows with q; no expansion at q = infinity");
    if (order < offset) return QinvSeries(order, order, {});

    // In u = 1/q: f = u^offset * nrev(u)/drev(u) with nrev(0), drev(0) != 0.
    auto reversed = [](const QPolynomial& p) {
        std::vector<BigRational> c(p.coeffs().rbegin(), p.coeffs().rend());
        return c;
    };
    std::vector<BigRational> nrev = reversed(f.num());
    std::vector<BigRational> drev = reversed(f.den());

    long long terms = order - offset + 1;
    std::vector<BigRational> s(static_cast<size_t>(terms), BigRational::zero());
    BigRational d0_inv = drev[0].inverse();
    for (long long k = 0; k < terms; ++k) {
        BigRational acc = k < static_cast<long long>(nrev.size()) ? nrev[static_cast<size_t>(k)]
                                                                  : BigRational::zero();
        for (long long j = 1; j <= k && j < static_cast<long long>(drev.size()); ++j)
            acc -= drev[static_cast<size_t>(j)] * s[static_cast<size_t>(k - j)];
        s[static_cast<size_t>(k)] = acc * d0_inv;
    }
    return QinvSeries(offset, order, std::move(s));
}

}  // namespace cycliq
