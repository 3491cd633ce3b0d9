#pragma once

#include <stdexcept>
#include <vector>

#include "cycliq/marrays.hpp"
#include "cycliq/qcontext.hpp"
#include "cycliq/qinv_series.hpp"
#include "cycliq/qrational_function.hpp"
#include "cycliq/rational.hpp"
#include "cycliq/trunc_series.hpp"

namespace cycliq {

/// Whether a computation ranges over the invertible stabiliser (group)
/// or over all subspace-preserving matrices (algebra).
enum class Ambient { group, algebra };

inline long long moebius(long long n) {
    long long result = 1;
    for (long long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            n /= p;
            if (n % p == 0) return 0;
            result = -result;
        }
    }
    if (n > 1) result = -result;
    return result;
}

/// Order q^{ij}(1 - q^{-i}) of the centraliser of a cyclic matrix whose
/// characteristic polynomial is the j-th power of a degree-i irreducible.
template <typename Ctx>
typename Ctx::Field centralizer_order(const Ctx& ctx, long long i, long long j) {
    if (i < 1 || j < 1) throw std::invalid_argument("centralizer_order needs i, j >= 1");
    return ctx.q_pow(i * j) - ctx.q_pow(i * j - i);
}

/// Number of monic degree-i irreducibles over F_q (necklace count); with
/// nonzero_constant set, the polynomial q = t is excluded, which only
/// matters in degree 1.
template <typename Ctx>
typename Ctx::Field irreducible_count(const Ctx& ctx, long long i, bool nonzero_constant) {
    using F = typename Ctx::Field;
    if (i < 1) throw std::invalid_argument("irreducible_count needs i >= 1");
    F acc = F::zero();
    for (long long d = 1; d <= i; ++d) {
        if (i % d != 0) continue;
        long long mu = moebius(d);
        if (mu == 0) continue;
        F term = ctx.q_pow(i / d);
        acc = (mu > 0) ? acc + term : acc - term;
    }
    acc = acc * ctx.from_rational(BigRational(1, i));
    if (nonzero_constant && i == 1) acc = acc - F::one();
    return acc;
}

/// N(N-1)...(N-m+1) for a field-valued N; the "m! choose(N, m)" pattern.
template <typename Ctx>
typename Ctx::Field falling_factorial(const Ctx& ctx, const typename Ctx::Field& n, long long m) {
    using F = typename Ctx::Field;
    F acc = F::one();
    for (long long u = 0; u < m; ++u) acc = acc * (n - ctx.from_rational(BigRational(u)));
    return acc;
}

namespace detail {

/// Visits every multiplicity profile (n_1, n_2, ...) with
/// sum_j j*n_j <= max_weight; n_j counts distinct irreducibles carried
/// with multiplicity exactly j. Calls fn(profile, weight).
template <typename Fn>
void for_each_multiplicity_profile(long long max_weight, Fn&& fn) {
    std::vector<long long> profile(static_cast<size_t>(std::max<long long>(max_weight, 0)), 0);
    auto rec = [&](auto&& self, long long j, long long rem) -> void {
        if (j == 0) {
            fn(profile, max_weight - rem);
            return;
        }
        for (long long m = 0; m * j <= rem; ++m) {
            profile[static_cast<size_t>(j - 1)] = m;
            self(self, j - 1, rem - m * j);
        }
        profile[static_cast<size_t>(j - 1)] = 0;
    };
    rec(rec, max_weight, max_weight);
}

/// Number of ways a polynomial with the given multiplicity profile admits
/// a divisor matching the row: product over j of
/// choose(tau_plus(j) - sum_{k>j} m_ik, m_ij), tau_plus(j) = sum_{k>=j} n_k.
inline BigRational divisor_choice_count(const RowSlice& row, const std::vector<long long>& profile) {
    BigRational acc = BigRational::one();
    for (const auto& [j, m] : row.multiplicities) {
        long long tau_plus = 0;
        for (size_t k = static_cast<size_t>(j - 1); k < profile.size(); ++k) tau_plus += profile[k];
        long long committed = 0;
        for (const auto& [j2, m2] : row.multiplicities)
            if (j2 > j) committed += m2;
        acc *= binomial_rational(tau_plus - committed, m);
        if (acc.is_zero()) break;
    }
    return acc;
}

}  // namespace detail

/// The degree-i block of the cyclic generating function, with every
/// polynomial h (product of degree-i irreducibles) weighted by the number
/// of its divisors matching the given row: the direct combinatorial sum of
/// counted terms t^{deg h}/Cent(h). An empty row yields the plain block.
template <typename Ctx>
TruncSeries<typename Ctx::Field> counted_block_series(const Ctx& ctx, long long i,
                                                      const RowSlice& row, Ambient kind,
                                                      long long order) {
    using F = typename Ctx::Field;
    F avail = irreducible_count(ctx, i, kind == Ambient::group);
    long long max_weight = order / i;
    std::vector<F> cent_inv(static_cast<size_t>(max_weight) + 1, F::zero());
    for (long long j = 1; j <= max_weight; ++j)
        cent_inv[static_cast<size_t>(j)] = centralizer_order(ctx, i, j).inverse();
    std::vector<F> ff(static_cast<size_t>(max_weight) + 1, F::one());
    for (long long s = 1; s <= max_weight; ++s)
        ff[static_cast<size_t>(s)] =
            ff[static_cast<size_t>(s - 1)] * (avail - ctx.from_rational(BigRational(s - 1)));

    std::vector<F> acc(static_cast<size_t>(order) + 1, F::zero());
    detail::for_each_multiplicity_profile(max_weight, [&](const std::vector<long long>& profile,
                                                          long long weight) {
        BigRational scale = detail::divisor_choice_count(row, profile);
        if (scale.is_zero()) return;
        long long distinct = 0;
        for (long long n : profile) distinct += n;
        F term = ff[static_cast<size_t>(distinct)];
        if (term.is_zero()) return;
        for (size_t jm1 = 0; jm1 < profile.size(); ++jm1) {
            long long n = profile[jm1];
            if (n == 0) continue;
            scale /= factorial_rational(n);
            F c = cent_inv[jm1 + 1];
            for (long long rep = 0; rep < n; ++rep) term = term * c;
        }
        term = term * ctx.from_rational(scale);
        acc[static_cast<size_t>(i * weight)] = acc[static_cast<size_t>(i * weight)] + term;
    });
    return TruncSeries<F>(order, std::move(acc));
}

/// Plain degree-i block (no divisor weighting): equals 1 + O(t^i). At
/// numeric q this is a series power with integer exponent; at symbolic q
/// the power is realised by the profile sum.
template <typename Ctx>
TruncSeries<typename Ctx::Field> block_series(const Ctx& ctx, long long i, long long order,
                                              Ambient kind = Ambient::group) {
    using F = typename Ctx::Field;
    if constexpr (Ctx::is_numeric) {
        F count = irreducible_count(ctx, i, kind == Ambient::group);
        if (ctx.fits_exponent(count)) {
            TruncSeries<F> base = TruncSeries<F>::one(order);
            for (long long j = 1; i * j <= order; ++j)
                base = base +
                       TruncSeries<F>::monomial(centralizer_order(ctx, i, j).inverse(), i * j, order);
            return base.pow(static_cast<unsigned long long>(ctx.to_exponent(count)));
        }
    }
    return counted_block_series(ctx, i, RowSlice{i, {}, 0}, kind, order);
}

/// Generating function for the proportion of cyclic matrices in GL(n, q):
/// the product of all degree blocks.
template <typename Ctx>
TruncSeries<typename Ctx::Field> cyclic_series_gl(const Ctx& ctx, long long order) {
    using F = typename Ctx::Field;
    TruncSeries<F> out = TruncSeries<F>::one(order);
    for (long long i = 1; i <= order; ++i) out = out * block_series(ctx, i, order);
    return out;
}

/// Weighted generating function for matrix algebras: coefficient of t^n is
/// the cyclic proportion in M(n, q) divided by the group/algebra order
/// ratio. Obtained from the GL series by restoring the block of powers of t.
template <typename Ctx>
TruncSeries<typename Ctx::Field> cyclic_series_m(const Ctx& ctx, long long order) {
    using F = typename Ctx::Field;
    TruncSeries<F> tblock = TruncSeries<F>::one(order);
    for (long long j = 1; j <= order; ++j)
        tblock = tblock + TruncSeries<F>::monomial(centralizer_order(ctx, 1, j).inverse(), j, order);
    return tblock * cyclic_series_gl(ctx, order);
}

/// |GL(n,q)| / |M(n,q)| = prod_{i=1..n} (1 - q^-i).
template <typename Ctx>
typename Ctx::Field group_algebra_ratio(const Ctx& ctx, long long n) {
    using F = typename Ctx::Field;
    if (n < 0) throw std::invalid_argument("group_algebra_ratio needs n >= 0");
    F acc = F::one();
    for (long long i = 1; i <= n; ++i) acc = acc * (F::one() - ctx.q_pow(-i));
    return acc;
}

/// |GL(V)_U| / |M(V)_U| for dim V = n, dim U = r.
template <typename Ctx>
typename Ctx::Field stab_group_algebra_ratio(const Ctx& ctx, long long n, long long r) {
    using F = typename Ctx::Field;
    if (r < 0 || r > n) throw std::invalid_argument("stabiliser ratio needs 0 <= r <= n");
    F acc = F::one();
    for (long long i = 1; i <= r; ++i) acc = acc * (F::one() - ctx.q_pow(-i));
    for (long long i = 1; i <= n - r; ++i) acc = acc * (F::one() - ctx.q_pow(-i));
    return acc;
}

/// Closed-form factor by which the cyclic series is multiplied to impose
/// row i of the multiplicity array: the ratio of the counted block to the
/// plain block. Rows absent from the array give the constant 1.
template <typename Ctx>
TruncSeries<typename Ctx::Field> correction_factor(const Ctx& ctx, long long i,
                                                   const MultiplicityArray& M, Ambient kind,
                                                   long long order) {
    using F = typename Ctx::Field;
    RowSlice row = row_slice(M, i);
    if (row.multiplicities.empty()) return TruncSeries<F>::one(order);

    long long m_i = 0;
    BigRational fact = BigRational::one();
    for (const auto& [j, m] : row.multiplicities) {
        (void)j;
        m_i += m;
        fact /= factorial_rational(m);
    }
    F avail = irreducible_count(ctx, i, kind == Ambient::group);
    F scalar = falling_factorial(ctx, avail, m_i) * ctx.from_rational(fact) * ctx.q_pow(-row.r_i);

    // (1 - q^-i + t^i q^-2i)^{-m_i}
    TruncSeries<F> base = TruncSeries<F>::constant(F::one() - ctx.q_pow(-i), order) +
                          TruncSeries<F>::monomial(ctx.q_pow(-2 * i), i, order);
    TruncSeries<F> rec = base.pow(static_cast<unsigned long long>(m_i)).reciprocal();
    return rec.scaled(scalar).shifted(row.r_i);
}

/// The same factor evaluated exactly at t = 1.
template <typename Ctx>
typename Ctx::Field correction_factor_at_one_with_count(const Ctx& ctx, long long i,
                                                        const MultiplicityArray& M,
                                                        const typename Ctx::Field& avail) {
    using F = typename Ctx::Field;
    RowSlice row = row_slice(M, i);
    if (row.multiplicities.empty()) return F::one();
    long long m_i = 0;
    BigRational fact = BigRational::one();
    for (const auto& [j, m] : row.multiplicities) {
        (void)j;
        m_i += m;
        fact /= factorial_rational(m);
    }
    F denom = (F::one() - ctx.q_pow(-i) + ctx.q_pow(-2 * i)).pow(m_i);
    return falling_factorial(ctx, avail, m_i) * ctx.from_rational(fact) * ctx.q_pow(-row.r_i) *
           denom.inverse();
}

template <typename Ctx>
typename Ctx::Field correction_factor_at_one(const Ctx& ctx, long long i,
                                             const MultiplicityArray& M, Ambient kind) {
    return correction_factor_at_one_with_count(
        ctx, i, M, irreducible_count(ctx, i, kind == Ambient::group));
}

/// sum over M(r) of prod_{i=1..r} of the t=1 correction factors.
template <typename Ctx>
typename Ctx::Field correction_sum_at_one(const Ctx& ctx, long long r, Ambient kind) {
    using F = typename Ctx::Field;
    F total = F::zero();
    for (const auto& M : enumerate_marrays(r)) {
        F prod = F::one();
        for (long long i = 1; i <= r; ++i) prod = prod * correction_factor_at_one(ctx, i, M, kind);
        total = total + prod;
    }
    return total;
}

/// Generating function for cyclic proportions in the stabiliser of an
/// r-dimensional subspace inside GL: closed-form route. Coefficients of
/// t^n for n < r vanish.
template <typename Ctx>
TruncSeries<typename Ctx::Field> stab_cyclic_series_gl(const Ctx& ctx, long long r, long long order) {
    using F = typename Ctx::Field;
    if (r < 0) throw std::invalid_argument("subspace dimension must be nonnegative");
    if (r == 0) return cyclic_series_gl(ctx, order);
    TruncSeries<F> sum(order);
    for (const auto& M : enumerate_marrays(r)) {
        TruncSeries<F> prod = TruncSeries<F>::one(order);
        for (long long i = 1; i <= r; ++i) prod = prod * correction_factor(ctx, i, M, Ambient::group, order);
        sum = sum + prod;
    }
    return cyclic_series_gl(ctx, order) * sum;
}

/// Algebra counterpart; coefficient of t^n is the cyclic proportion in
/// M(V)_U divided by the stabiliser order ratio.
template <typename Ctx>
TruncSeries<typename Ctx::Field> stab_cyclic_series_m(const Ctx& ctx, long long r, long long order) {
    using F = typename Ctx::Field;
    if (r < 0) throw std::invalid_argument("subspace dimension must be nonnegative");
    if (r == 0) return cyclic_series_m(ctx, order);
    TruncSeries<F> sum(order);
    for (const auto& M : enumerate_marrays(r)) {
        TruncSeries<F> prod = TruncSeries<F>::one(order);
        for (long long i = 1; i <= r; ++i)
            prod = prod * correction_factor(ctx, i, M, Ambient::algebra, order);
        sum = sum + prod;
    }
    return cyclic_series_m(ctx, order) * sum;
}

/// Direct route: sum over arrays of the product of counted blocks, the
/// blocks beyond row r being the plain ones. Slower; kept as the
/// cross-check of the closed form.
template <typename Ctx>
TruncSeries<typename Ctx::Field> stab_cyclic_series_direct(const Ctx& ctx, long long r,
                                                           long long order, Ambient kind) {
    using F = typename Ctx::Field;
    TruncSeries<F> tail = TruncSeries<F>::one(order);
    for (long long i = r + 1; i <= order; ++i)
        tail = tail * counted_block_series(ctx, i, RowSlice{i, {}, 0}, kind, order);
    TruncSeries<F> total(order);
    for (const auto& M : enumerate_marrays(r)) {
        TruncSeries<F> prod = tail;
        for (long long i = 1; i <= r; ++i)
            prod = prod * counted_block_series(ctx, i, row_slice(M, i), kind, order);
        total = total + prod;
    }
    return total;
}

/// True cyclic proportion in M(V)_U at dimension n: the weighted series
/// coefficient multiplied back by the stabiliser order ratio.
template <typename Ctx>
typename Ctx::Field stab_cyclic_proportion_m(const Ctx& ctx, long long r, long long n) {
    if (r > n) throw std::invalid_argument("subspace dimension exceeds the space dimension");
    return stab_cyclic_series_m(ctx, r, n).coeff(n) * stab_group_algebra_ratio(ctx, n, r);
}

enum class EulerFactorCount { none, finite_r_fold, full_infinite };

/// A limiting proportion: an exact rational part, optionally multiplied by
/// the infinite product prod_{i>=1}(1 - q^-i) that cannot be represented
/// as a rational function.
struct LimitValue {
    QRationalFunction rational;
    EulerFactorCount euler = EulerFactorCount::none;
};

/// prod_{i=start..order} (1 - u^i) truncated at u^order; factors beyond
/// the order cannot affect retained terms, so the truncation is exact.
inline QinvSeries euler_product_series(long long order, long long start = 1) {
    if (order < 0) throw std::invalid_argument("euler_product_series needs a nonnegative order");
    std::vector<BigRational> c(static_cast<size_t>(order) + 1, BigRational::zero());
    c[0] = BigRational::one();
    for (long long i = std::max<long long>(start, 1); i <= order; ++i)
        for (long long k = order; k >= i; --k)
            c[static_cast<size_t>(k)] -= c[static_cast<size_t>(k - i)];
    return QinvSeries(0, order, std::move(c));
}

/// Limit of the cyclic proportion in GL(V)_U as n grows, exact in q.
inline LimitValue stab_limit_gl(long long r) {
    SymbolicQ ctx;
    QRationalFunction full_group_limit =
        (QRationalFunction::one() - QRationalFunction::q_power(-5)) /
        (QRationalFunction::one() + QRationalFunction::q_power(-3));
    return LimitValue{full_group_limit * correction_sum_at_one(ctx, r, Ambient::group), EulerFactorCount::none};
}

/// Limit of the cyclic proportion in M(V)_U: rational part carrying the
/// finite r-fold ratio factor, plus the full infinite Euler product.
inline LimitValue stab_limit_m(long long r) {
    SymbolicQ ctx;
    QRationalFunction rat =
        (QRationalFunction::one() - QRationalFunction::q_power(-5)) /
        ((QRationalFunction::one() - QRationalFunction::q_power(-1)) *
         (QRationalFunction::one() - QRationalFunction::q_power(-2)));
    rat *= correction_sum_at_one(ctx, r, Ambient::algebra);
    for (long long i = 1; i <= r; ++i)
        rat *= QRationalFunction::one() - QRationalFunction::q_power(-i);
    return LimitValue{rat, EulerFactorCount::full_infinite};
}

inline QinvSeries stab_limit_gl_expansion(long long r, long long order) {
    return laurent_expand(stab_limit_gl(r).rational, order);
}

inline QinvSeries stab_limit_m_expansion(long long r, long long order) {
    return laurent_expand(stab_limit_m(r).rational, order) * euler_product_series(order);
}

}  // namespace cycliq
