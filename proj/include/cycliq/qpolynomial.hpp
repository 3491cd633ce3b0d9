#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "cycliq/rational.hpp"

namespace cycliq {

/// Univariate polynomial in q over the rationals, coefficients ascending.
/// The zero polynomial has an empty coefficient list; otherwise the last
/// coefficient is nonzero.
class QPolynomial {
public:
    QPolynomial() = default;
    QPolynomial(const BigRational& c) {
        if (!c.is_zero()) c_.push_back(c);
    }
    QPolynomial(long long c) : QPolynomial(BigRational(c)) {}
    explicit QPolynomial(std::vector<BigRational> coeffs) : c_(std::move(coeffs)) { trim(); }

    static QPolynomial monomial(const BigRational& coeff, long long deg) {
        if (coeff.is_zero()) return QPolynomial();
        std::vector<BigRational> c(static_cast<size_t>(deg) + 1, BigRational::zero());
        c.back() = coeff;
        return QPolynomial(std::move(c));
    }
    /// The indeterminate q.
    static QPolynomial q() { return monomial(BigRational::one(), 1); }

    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }
    long long degree() const { return static_cast<long long>(c_.size()) - 1; }

    const std::vector<BigRational>& coeffs() const { return c_; }
    BigRational coeff(long long k) const {
        if (k < 0 || k >= static_cast<long long>(c_.size())) return BigRational::zero();
        return c_[static_cast<size_t>(k)];
    }
    const BigRational& leading() const {
        if (is_zero()) throw std::domain_error("leading coefficient of zero polynomial");
        return c_.back();
    }

    QPolynomial operator-() const {
        QPolynomial r = *this;
        for (auto& x : r.c_) x = -x;
        return r;
    }

    QPolynomial operator+(const QPolynomial& o) const {
        std::vector<BigRational> c(std::max(c_.size(), o.c_.size()), BigRational::zero());
        for (size_t k = 0; k < c.size(); ++k) {
            if (k < c_.size()) c[k] += c_[k];
            if (k < o.c_.size()) c[k] += o.c_[k];
        }
        return QPolynomial(std::move(c));
    }
    QPolynomial operator-(const QPolynomial& o) const { return *this + (-o); }

    QPolynomial operator*(const QPolynomial& o) const {
        if (is_zero() || o.is_zero()) return QPolynomial();
        std::vector<BigRational> c(c_.size() + o.c_.size() - 1, BigRational::zero());
        for (size_t a = 0; a < c_.size(); ++a) {
            if (c_[a].is_zero()) continue;
            for (size_t b = 0; b < o.c_.size(); ++b) c[a + b] += c_[a] * o.c_[b];
        }
        return QPolynomial(std::move(c));
    }

    QPolynomial operator*(const BigRational& s) const {
        if (s.is_zero()) return QPolynomial();
        QPolynomial r = *this;
        for (auto& x : r.c_) x *= s;
        return r;
    }

    /// Euclidean division, returns {quotient, remainder}.
    std::pair<QPolynomial, QPolynomial> divmod(const QPolynomial& d) const {
        if (d.is_zero()) throw std::domain_error("polynomial division by zero");
        QPolynomial rem = *this;
        std::vector<BigRational> quot;
        long long dq = degree() - d.degree();
        if (dq < 0) return {QPolynomial(), rem};
        quot.assign(static_cast<size_t>(dq) + 1, BigRational::zero());
        BigRational lead_inv = d.leading().inverse();
        while (!rem.is_zero() && rem.degree() >= d.degree()) {
            long long k = rem.degree() - d.degree();
            BigRational f = rem.leading() * lead_inv;
            quot[static_cast<size_t>(k)] = f;
            rem = rem - d * monomial(f, k);
        }
        return {QPolynomial(std::move(quot)), rem};
    }

    QPolynomial monic() const {
        if (is_zero()) return *this;
        return *this * leading().inverse();
    }

    BigRational eval(const BigRational& x) const {
        BigRational acc = BigRational::zero();
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    bool operator==(const QPolynomial& o) const { return c_ == o.c_; }
    bool operator!=(const QPolynomial& o) const { return !(*this == o); }

    /// Monic gcd. Euclid over the integers on primitive parts keeps
    /// coefficient growth polynomial.
    static QPolynomial gcd(const QPolynomial& a, const QPolynomial& b) {
        if (a.is_zero()) return b.monic();
        if (b.is_zero()) return a.monic();
        std::vector<BigInt> r0 = a.integer_primitive();
        std::vector<BigInt> r1 = b.integer_primitive();
        if (r0.size() < r1.size()) std::swap(r0, r1);
        while (!r1.empty()) {
            std::vector<BigInt> rem = pseudo_rem(r0, r1);
            make_primitive(rem);
            r0 = std::move(r1);
            r1 = std::move(rem);
        }
        std::vector<BigRational> c(r0.size());
        for (size_t k = 0; k < r0.size(); ++k) c[k] = BigRational(r0[k]);
        return QPolynomial(std::move(c)).monic();
    }

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    /// Primitive integer image (content removed, positive leading coefficient).
    std::vector<BigInt> integer_primitive() const {
        BigInt l = 1;
        for (const auto& x : c_) l = boost::multiprecision::lcm(l, x.den());
        std::vector<BigInt> v(c_.size());
        for (size_t k = 0; k < c_.size(); ++k) v[k] = c_[k].num() * (l / c_[k].den());
        make_primitive(v);
        return v;
    }

    static void make_primitive(std::vector<BigInt>& v) {
        while (!v.empty() && v.back() == 0) v.pop_back();
        if (v.empty()) return;
        BigInt g = 0;
        for (const auto& x : v) g = boost::multiprecision::gcd(g, x);
        if (v.back() < 0) g = -g;
        if (g != 1)
            for (auto& x : v) x /= g;
    }

    /// Integer pseudo-remainder of a by b; an associate of the rational
    /// remainder, which is all the primitive PRS needs.
    static std::vector<BigInt> pseudo_rem(std::vector<BigInt> a, const std::vector<BigInt>& b) {
        const BigInt& lb = b.back();
        while (a.size() >= b.size()) {
            BigInt la = a.back();
            for (auto& x : a) x *= lb;
            size_t shift = a.size() - b.size();
            for (size_t k = 0; k < b.size(); ++k) a[shift + k] -= la * b[k];
            while (!a.empty() && a.back() == 0) a.pop_back();
        }
        return a;
    }

    std::vector<BigRational> c_;
};

}  // namespace cycliq
