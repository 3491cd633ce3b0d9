#pragma once

#include <limits>
#include <stdexcept>

#include "cycliq/qrational_function.hpp"
#include "cycliq/rational.hpp"

namespace cycliq {

/// Coefficient context for computations with q left symbolic: everything
/// lives in the field of rational functions of q.
struct SymbolicQ {
    using Field = QRationalFunction;
    static constexpr bool is_numeric = false;

    Field q_pow(long long e) const { return QRationalFunction::q_power(e); }
    Field from_rational(const BigRational& r) const { return QRationalFunction(r); }
};

/// Coefficient context for computations at a fixed numeric prime power q:
/// everything lives in the rationals.
class NumericQ {
public:
    using Field = BigRational;
    static constexpr bool is_numeric = true;

    explicit NumericQ(long long q) : q_(q) {
        if (q < 2) throw std::invalid_argument("numeric q must be at least 2");
    }

    Field q_pow(long long e) const { return q_.pow(e); }
    Field from_rational(const BigRational& r) const { return r; }

    const BigRational& q() const { return q_; }

    /// The value of an exact-integer field element, for use as an exponent.
    long long to_exponent(const Field& v) const {
        if (!v.is_integer() || v.is_negative())
            throw std::domain_error("expected a nonnegative integer exponent");
        if (v.num() > BigInt(std::numeric_limits<long long>::max()))
            throw std::overflow_error("exponent does not fit a machine integer");
        return v.num().convert_to<long long>();
    }

    bool fits_exponent(const Field& v) const {
        return v.is_integer() && !v.is_negative() &&
               v.num() <= BigInt(std::numeric_limits<long long>::max());
    }

private:
    BigRational q_;
};

}  // namespace cycliq
