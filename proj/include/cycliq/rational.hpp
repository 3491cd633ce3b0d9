#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace cycliq {

using BigInt = boost::multiprecision::cpp_int;

/// Arbitrary-precision rational, always reduced, denominator always positive.
/// Zero is 0/1.
class BigRational {
public:
    BigRational() : num_(0), den_(1) {}
    BigRational(long long n) : num_(n), den_(1) {}
    BigRational(BigInt n) : num_(std::move(n)), den_(1) {}
    BigRational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) { reduce(); }

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_one() const { return num_ == 1 && den_ == 1; }
    bool is_negative() const { return num_ < 0; }
    bool is_integer() const { return den_ == 1; }

    static BigRational zero() { return BigRational(); }
    static BigRational one() { return BigRational(1); }

    BigRational operator-() const {
        BigRational r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }

    BigRational operator+(const BigRational& o) const {
        return BigRational(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    }
    BigRational operator-(const BigRational& o) const {
        return BigRational(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
    }
    BigRational operator*(const BigRational& o) const {
        return BigRational(num_ * o.num_, den_ * o.den_);
    }
    BigRational operator/(const BigRational& o) const {
        if (o.is_zero()) throw std::domain_error("rational division by zero");
        return BigRational(num_ * o.den_, den_ * o.num_);
    }

    BigRational& operator+=(const BigRational& o) { return *this = *this + o; }
    BigRational& operator-=(const BigRational& o) { return *this = *this - o; }
    BigRational& operator*=(const BigRational& o) { return *this = *this * o; }
    BigRational& operator/=(const BigRational& o) { return *this = *this / o; }

    BigRational inverse() const {
        if (is_zero()) throw std::domain_error("inverse of zero rational");
        return BigRational(den_, num_);
    }

    BigRational abs() const { return num_ < 0 ? -*this : *this; }

    /// q^e for integer e (negative allowed when base nonzero).
    BigRational pow(long long e) const {
        if (e < 0) return inverse().pow(-e);
        BigRational base = *this, acc = one();
        while (e > 0) {
            if (e & 1) acc *= base;
            base *= base;
            e >>= 1;
        }
        return acc;
    }

    bool operator==(const BigRational& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const BigRational& o) const { return !(*this == o); }
    bool operator<(const BigRational& o) const { return num_ * o.den_ < o.num_ * den_; }
    bool operator<=(const BigRational& o) const { return num_ * o.den_ <= o.num_ * den_; }
    bool operator>(const BigRational& o) const { return o < *this; }
    bool operator>=(const BigRational& o) const { return o <= *this; }

    /// "num/den", the "/den" part omitted for integers.
    std::string to_string() const {
        std::string s = num_.str();
        if (den_ != 1) s += "/" + den_.str();
        return s;
    }

    static BigRational from_string(const std::string& s) {
        auto slash = s.find('/');
        if (slash == std::string::npos) return BigRational(BigInt(s));
        return BigRational(BigInt(s.substr(0, slash)), BigInt(s.substr(slash + 1)));
    }

    double to_double() const {
        return num_.convert_to<double>() / den_.convert_to<double>();
    }

private:
    void reduce() {
        if (den_ == 0) throw std::domain_error("rational with zero denominator");
        if (num_ == 0) {
            den_ = 1;
            return;
        }
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        BigInt g = boost::multiprecision::gcd(num_ < 0 ? BigInt(-num_) : num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    BigInt num_;
    BigInt den_;
};

inline BigRational factorial_rational(long long n) {
    BigInt f = 1;
    for (long long k = 2; k <= n; ++k) f *= k;
    return BigRational(f);
}

/// C(a, b) over the integers, zero when a < b or b < 0.
inline BigRational binomial_rational(long long a, long long b) {
    if (b < 0 || a < b) return BigRational::zero();
    BigInt acc = 1;
    for (long long u = 0; u < b; ++u) acc *= (a - u);
    return BigRational(acc) / factorial_rational(b);
}

}  // namespace cycliq
