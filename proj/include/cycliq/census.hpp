#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <thread>
#include <unordered_set>
#include <vector>

#include "cycliq/gf.hpp"

namespace cycliq {

struct CensusResult {
    long long q = 0;
    long long n = 0;
    long long r = 0;
    bool invertible_only = false;
    long long total = 0;
    long long cyclic = 0;
};

namespace detail {

inline long long ipow_guarded(long long base, long long exp, long long guard) {
    long long v = 1;
    for (long long k = 0; k < exp; ++k) {
        if (v > guard / base) return guard + 1;
        v *= base;
    }
    return v;
}

inline std::vector<GFMatrix> all_matrices(PrimeField f, int n, bool invertible_only,
                                          long long guard) {
    std::vector<GFMatrix> out;
    if (n == 0) {
        out.emplace_back(f, 0);
        return out;
    }
    long long count = ipow_guarded(f.p, static_cast<long long>(n) * n, guard);
    if (count > guard) throw std::length_error("enumeration size guard exceeded");
    for (long long code = 0; code < count; ++code) {
        GFMatrix m(f, n);
        long long rest = code;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                m.at(i, j) = static_cast<uint8_t>(rest % f.p);
                rest /= f.p;
            }
        if (!invertible_only || m.is_invertible()) out.push_back(std::move(m));
    }
    return out;
}

/// Assemble a stabiliser element from blocks: top is r x r, bottom is
/// (n-r) x (n-r), and x_code encodes the (n-r) x r bottom-left block in
/// base p. The top-right block is zero by membership.
inline GFMatrix assemble_stabilizer(PrimeField f, int n, int r, const GFMatrix& top,
                                    const GFMatrix& bottom, long long x_code) {
    GFMatrix m(f, n);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) m.at(i, j) = top.at(i, j);
    for (int i = 0; i < n - r; ++i)
        for (int j = 0; j < n - r; ++j) m.at(r + i, r + j) = bottom.at(i, j);
    long long rest = x_code;
    for (int i = 0; i < n - r; ++i)
        for (int j = 0; j < r; ++j) {
            m.at(r + i, j) = static_cast<uint8_t>(rest % f.p);
            rest /= f.p;
        }
    return m;
}

}  // namespace detail

/// |GL(k, q)| = prod_{i=0..k-1} (q^k - q^i).
inline long long gl_order(long long q, long long k) {
    long long qk = 1;
    for (long long i = 0; i < k; ++i) qk *= q;
    long long order = 1;
    long long qi = 1;
    for (long long i = 0; i < k; ++i) {
        order *= qk - qi;
        qi *= q;
    }
    return order;
}

/// |GL(V)_U| = q^{r(n-r)} |GL(r,q)| |GL(n-r,q)|.
inline long long stabilizer_group_order(long long q, long long n, long long r) {
    long long v = gl_order(q, r) * gl_order(q, n - r);
    for (long long k = 0; k < r * (n - r); ++k) v *= q;
    return v;
}

/// |M(V)_U| = q^{n^2 - r(n-r)}.
inline long long stabilizer_algebra_order(long long q, long long n, long long r) {
    long long v = 1;
    for (long long k = 0; k < n * n - r * (n - r); ++k) v *= q;
    return v;
}

/// Visit every element of GL(V)_U (or M(V)_U) for U the span of the first
/// r basis vectors.
template <typename Fn>
void for_each_stabilizer(PrimeField f, int n, int r, bool invertible_only, long long guard, Fn&& fn) {
    if (r < 1 || r >= n) throw std::invalid_argument("subspace dimension must satisfy 1 <= r < n");
    auto tops = detail::all_matrices(f, r, invertible_only, guard);
    auto bottoms = detail::all_matrices(f, n - r, invertible_only, guard);
    long long x_count = detail::ipow_guarded(f.p, static_cast<long long>(n - r) * r, guard);
    long long total = static_cast<long long>(tops.size()) * static_cast<long long>(bottoms.size());
    if (x_count > guard || total > guard / x_count)
        throw std::length_error("enumeration size guard exceeded");
    for (const auto& top : tops)
        for (const auto& bottom : bottoms)
            for (long long x = 0; x < x_count; ++x)
                fn(detail::assemble_stabilizer(f, n, r, top, bottom, x));
}

/// Exhaustive cyclic count over GL(V)_U or M(V)_U. Sharded over the
/// diagonal blocks; shards are pure counters, so the result does not
/// depend on the shard count.
inline CensusResult census(long long q, long long n, long long r, bool invertible_only,
                           long long max_enumeration = 100000000, int shards = 0) {
    PrimeField f(static_cast<int>(q));
    if (r < 1 || r >= n) throw std::invalid_argument("subspace dimension must satisfy 1 <= r < n");
    auto tops = detail::all_matrices(f, static_cast<int>(r), invertible_only, max_enumeration);
    auto bottoms = detail::all_matrices(f, static_cast<int>(n - r), invertible_only, max_enumeration);
    long long x_count = detail::ipow_guarded(f.p, (n - r) * r, max_enumeration);
    long long outer = static_cast<long long>(tops.size()) * static_cast<long long>(bottoms.size());
    if (x_count > max_enumeration || outer > max_enumeration / x_count)
        throw std::length_error("enumeration size guard exceeded");
    long long total = outer * x_count;

    if (shards <= 0) {
        unsigned hc = std::thread::hardware_concurrency();
        shards = static_cast<int>(std::clamp<unsigned>(hc, 1, 16));
    }
    shards = static_cast<int>(std::min<long long>(shards, std::max<long long>(outer, 1)));

    std::vector<long long> counts(static_cast<size_t>(shards), 0);
    auto work = [&](int s) {
        long long lo = outer * s / shards;
        long long hi = outer * (s + 1) / shards;
        long long found = 0;
        for (long long c = lo; c < hi; ++c) {
            const GFMatrix& top = tops[static_cast<size_t>(c / static_cast<long long>(bottoms.size()))];
            const GFMatrix& bottom = bottoms[static_cast<size_t>(c % static_cast<long long>(bottoms.size()))];
            for (long long x = 0; x < x_count; ++x) {
                GFMatrix m = detail::assemble_stabilizer(f, static_cast<int>(n), static_cast<int>(r),
                                                         top, bottom, x);
                if (is_cyclic(m)) ++found;
            }
        }
        counts[static_cast<size_t>(s)] = found;
    };
    if (shards == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (int s = 0; s < shards; ++s) pool.emplace_back(work, s);
        for (auto& t : pool) t.join();
    }
    long long cyclic = 0;
    for (long long c : counts) cyclic += c;
    return CensusResult{q, n, r, invertible_only, total, cyclic};
}

/// Number of distinct monic degree-r divisors of h, by trial division
/// over all q^r monic candidates.
inline long long divisor_count_brute(const GFPoly& h, long long r) {
    if (r < 0) throw std::invalid_argument("divisor degree must be nonnegative");
    if (r == 0) return 1;
    if (h.degree() < r) return 0;
    long long count = 0;
    for (const GFPoly& cand : GFPoly::all_monic(h.field(), r))
        if (cand.divides(h)) ++count;
    return count;
}

struct ConjugacyCensus {
    long long orbit_count = 0;
    long long pair_count = 0;
};

/// Orbits of GL(V)_U conjugation on the cyclic elements of M(V)_U,
/// counted by explicit closure, against the number of divisor pairs
/// (f, h) with deg f = r, deg h = n, f | h.
inline ConjugacyCensus conjugacy_census(long long q, long long n, long long r,
                                        long long max_group = 100000) {
    PrimeField f(static_cast<int>(q));
    std::vector<GFMatrix> group;
    for_each_stabilizer(f, static_cast<int>(n), static_cast<int>(r), true, max_group,
                        [&](GFMatrix m) { group.push_back(std::move(m)); });
    std::vector<GFMatrix> inverses;
    inverses.reserve(group.size());
    for (const auto& g : group) inverses.push_back(g.inverse());

    std::vector<GFMatrix> cyclics;
    for_each_stabilizer(f, static_cast<int>(n), static_cast<int>(r), false, max_group,
                        [&](GFMatrix m) {
                            if (is_cyclic(m)) cyclics.push_back(std::move(m));
                        });

    std::unordered_set<uint64_t> visited;
    long long orbits = 0;
    for (const auto& a : cyclics) {
        if (visited.count(a.encode())) continue;
        ++orbits;
        for (size_t k = 0; k < group.size(); ++k) visited.insert((inverses[k] * a * group[k]).encode());
    }

    long long pairs = 0;
    for (const GFPoly& h : GFPoly::all_monic(f, n))
        for (const GFPoly& d : GFPoly::all_monic(f, r))
            if (d.divides(h)) ++pairs;
    return ConjugacyCensus{orbits, pairs};
}

/// |C_{GL(n,q)}(A)| by enumerating the full general linear group.
inline long long centralizer_order_gl(const GFMatrix& A, long long max_enumeration = 100000000) {
    auto all = detail::all_matrices(A.field(), A.dim(), true, max_enumeration);
    long long count = 0;
    for (const auto& b : all)
        if (A * b == b * A) ++count;
    return count;
}

struct TLambdaResult {
    int lambda = 0;
    long long members = 0;
    bool all_noncyclic = true;
    /// Members whose lambda-eigenspace has dimension above 2; the
    /// membership conditions are tested literally, this is reported
    /// separately rather than folded into them.
    long long eigenspace_dim_gt2 = 0;
    std::vector<uint64_t> member_codes;
};

/// Enumerate the family of stabiliser elements with a lambda-eigenvector
/// in each of the two prescribed affine cosets and characteristic
/// polynomial not divisible by (t - lambda)^3.
inline TLambdaResult t_lambda_enumerate(long long q, long long n, long long r, int lambda,
                                        long long max_enumeration = 100000000) {
    PrimeField f(static_cast<int>(q));
    if (lambda <= 0 || lambda >= f.p) throw std::invalid_argument("lambda must be a nonzero field element");
    const int nn = static_cast<int>(n);
    const int rr = static_cast<int>(r);
    TLambdaResult res;
    res.lambda = lambda;

    auto is_eigen = [&](const GFMatrix& m, const std::vector<uint8_t>& w) {
        std::vector<uint8_t> img = m.apply_row(w);
        for (int j = 0; j < nn; ++j)
            if (img[static_cast<size_t>(j)] != f.mul(lambda, w[static_cast<size_t>(j)])) return false;
        return true;
    };

    long long coset1 = detail::ipow_guarded(f.p, r - 1, max_enumeration);
    long long coset2 = detail::ipow_guarded(f.p, n - 1, max_enumeration);
    GFPoly lin(f, {static_cast<uint8_t>(f.neg(lambda)), 1});  // t - lambda

    for_each_stabilizer(f, nn, rr, true, max_enumeration, [&](const GFMatrix& m) {
        bool has_w1 = false;
        std::vector<uint8_t> w(static_cast<size_t>(nn), 0);
        for (long long code = 0; code < coset1 && !has_w1; ++code) {
            std::fill(w.begin(), w.end(), 0);
            w[0] = 1;
            long long rest = code;
            for (int i = 1; i < rr; ++i) {
                w[static_cast<size_t>(i)] = static_cast<uint8_t>(rest % f.p);
                rest /= f.p;
            }
            has_w1 = is_eigen(m, w);
        }
        if (!has_w1) return;
        bool has_w2 = false;
        for (long long code = 0; code < coset2 && !has_w2; ++code) {
            std::fill(w.begin(), w.end(), 0);
            w[static_cast<size_t>(nn - 1)] = 1;
            long long rest = code;
            for (int i = 0; i < nn - 1; ++i) {
                w[static_cast<size_t>(i)] = static_cast<uint8_t>(rest % f.p);
                rest /= f.p;
            }
            has_w2 = is_eigen(m, w);
        }
        if (!has_w2) return;

        GFPoly c = char_poly(m);
        int cube_divisions = 0;
        for (int k = 0; k < 3; ++k) {
            auto [quo, rem] = c.divmod(lin);
            if (!rem.is_zero()) break;
            c = quo;
            ++cube_divisions;
        }
        if (cube_divisions == 3) return;

        ++res.members;
        res.member_codes.push_back(m.encode());
        if (is_cyclic(m)) res.all_noncyclic = false;
        GFMatrix shifted = m;
        for (int i = 0; i < nn; ++i) shifted.at(i, i) = static_cast<uint8_t>(f.sub(shifted.at(i, i), lambda));
        if (nn - shifted.rank() > 2) ++res.eigenspace_dim_gt2;
    });
    std::sort(res.member_codes.begin(), res.member_codes.end());
    return res;
}

struct TLambdaIntersection {
    int lambda = 0;
    int gamma = 0;
    long long size = 0;
};

struct TLambdaFamily {
    long long q = 0, n = 0, r = 0;
    long long group_order = 0;
    std::vector<TLambdaResult> per_lambda;
    std::vector<TLambdaIntersection> intersections;
};

inline TLambdaFamily t_lambda_family(long long q, long long n, long long r,
                                     long long max_enumeration = 100000000) {
    TLambdaFamily fam;
    fam.q = q;
    fam.n = n;
    fam.r = r;
    fam.group_order = stabilizer_group_order(q, n, r);
    for (int lambda = 1; lambda < q; ++lambda)
        fam.per_lambda.push_back(t_lambda_enumerate(q, n, r, lambda, max_enumeration));
    for (size_t a = 0; a < fam.per_lambda.size(); ++a)
        for (size_t b = a + 1; b < fam.per_lambda.size(); ++b) {
            std::vector<uint64_t> both;
            std::set_intersection(fam.per_lambda[a].member_codes.begin(),
                                  fam.per_lambda[a].member_codes.end(),
                                  fam.per_lambda[b].member_codes.begin(),
                                  fam.per_lambda[b].member_codes.end(), std::back_inserter(both));
            fam.intersections.push_back(TLambdaIntersection{fam.per_lambda[a].lambda,
                                                            fam.per_lambda[b].lambda,
                                                            static_cast<long long>(both.size())});
        }
    return fam;
}

}  // namespace cycliq
