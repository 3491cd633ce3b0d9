#pragma once

#include <stdexcept>
#include <string>
#include <utility>

#include "cycliq/qpolynomial.hpp"
#include "cycliq/rational.hpp"

namespace cycliq {

/// Element of Q(q): a ratio of polynomials kept in canonical form
/// (coprime numerator/denominator, monic denominator), so structural
/// equality decides mathematical equality.
class QRationalFunction {
public:
    QRationalFunction() : num_(), den_(1) {}
    QRationalFunction(const BigRational& c) : num_(c), den_(1) {}
    QRationalFunction(long long c) : num_(c), den_(1) {}
    QRationalFunction(QPolynomial p) : num_(std::move(p)), den_(1) {}
    QRationalFunction(QPolynomial num, QPolynomial den) : num_(std::move(num)), den_(std::move(den)) {
        reduce();
    }

    const QPolynomial& num() const { return num_; }
    const QPolynomial& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }

    static QRationalFunction zero() { return QRationalFunction(); }
    static QRationalFunction one() { return QRationalFunction(1); }

    /// q^e, also for negative e.
    static QRationalFunction q_power(long long e) {
        if (e >= 0) return QRationalFunction(QPolynomial::monomial(BigRational::one(), e));
        return QRationalFunction(QPolynomial(1), QPolynomial::monomial(BigRational::one(), -e));
    }

    QRationalFunction operator-() const {
        QRationalFunction r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }

    // Addition and multiplication reduce through denominator gcds up
    // front, which keeps the expensive polynomial gcds on small inputs;
    // both operands being canonical makes the results canonical again.
    QRationalFunction operator+(const QRationalFunction& o) const {
        if (is_zero()) return o;
        if (o.is_zero()) return *this;
        QPolynomial g = QPolynomial::gcd(den_, o.den_);
        if (g.degree() == 0)
            return raw_monic(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
        QPolynomial b1 = den_.divmod(g).first;
        QPolynomial d1 = o.den_.divmod(g).first;
        QPolynomial num = num_ * d1 + o.num_ * b1;
        QPolynomial h = QPolynomial::gcd(num, g);
        if (h.degree() > 0) {
            num = num.divmod(h).first;
            g = g.divmod(h).first;
        }
        return raw_monic(std::move(num), g * b1 * d1);
    }
    QRationalFunction operator-(const QRationalFunction& o) const { return *this + (-o); }
    QRationalFunction operator*(const QRationalFunction& o) const {
        if (is_zero() || o.is_zero()) return zero();
        QPolynomial g1 = QPolynomial::gcd(num_, o.den_);
        QPolynomial g2 = QPolynomial::gcd(o.num_, den_);
        QPolynomial a = g1.degree() > 0 ? num_.divmod(g1).first : num_;
        QPolynomial d = g1.degree() > 0 ? o.den_.divmod(g1).first : o.den_;
        QPolynomial c = g2.degree() > 0 ? o.num_.divmod(g2).first : o.num_;
        QPolynomial b = g2.degree() > 0 ? den_.divmod(g2).first : den_;
        return raw_monic(a * c, b * d);
    }
    QRationalFunction operator/(const QRationalFunction& o) const {
        if (o.is_zero()) throw std::domain_error("division by the zero rational function");
        return *this * o.inverse();
    }

    QRationalFunction& operator+=(const QRationalFunction& o) { return *this = *this + o; }
    QRationalFunction& operator-=(const QRationalFunction& o) { return *this = *this - o; }
    QRationalFunction& operator*=(const QRationalFunction& o) { return *this = *this * o; }
    QRationalFunction& operator/=(const QRationalFunction& o) { return *this = *this / o; }

    QRationalFunction inverse() const {
        if (is_zero()) throw std::domain_error("inverse of the zero rational function");
        return raw_monic(den_, num_);
    }

    QRationalFunction pow(long long e) const {
        if (e < 0) return inverse().pow(-e);
        QRationalFunction base = *this, acc = one();
        while (e > 0) {
            if (e & 1) acc *= base;
            base *= base;
            e >>= 1;
        }
        return acc;
    }

    /// Evaluation at a numeric q; throws when the denominator vanishes there.
    BigRational eval(const BigRational& q0) const {
        BigRational d = den_.eval(q0);
        if (d.is_zero()) throw std::domain_error("rational function has a pole at the evaluation point");
        return num_.eval(q0) / d;
    }

    bool operator==(const QRationalFunction& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const QRationalFunction& o) const { return !(*this == o); }

private:
    /// Already-coprime parts: only normalises the zero case and the
    /// monic-denominator convention.
    static QRationalFunction raw_monic(QPolynomial num, QPolynomial den) {
        QRationalFunction r;
        if (num.is_zero()) return r;
        BigRational lead_inv = den.leading().inverse();
        r.num_ = num * lead_inv;
        r.den_ = den * lead_inv;
        return r;
    }
    void reduce() {
        if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
        if (num_.is_zero()) {
            den_ = QPolynomial(1);
            return;
        }
        QPolynomial g = QPolynomial::gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = num_.divmod(g).first;
            den_ = den_.divmod(g).first;
        }
        BigRational lead_inv = den_.leading().inverse();
        num_ = num_ * lead_inv;
        den_ = den_ * lead_inv;
    }

    QPolynomial num_;
    QPolynomial den_;
};

}  // namespace cycliq
