#pragma once

#include <algorithm>
#include <stdexcept>
#include <tuple>
#include <vector>

#include "cycliq/rational.hpp"

namespace cycliq {

/// A multiplicity array M = (m_ij) of total weight r: m_ij counts the
/// distinct monic degree-i irreducible factors appearing with multiplicity
/// exactly j, so sum of i*j*m_ij over the stored entries is r. Zero
/// entries are absent.
struct MultiplicityArray {
    long long r = 0;
    /// (i, j, m_ij) with m_ij >= 1, sorted by (i, j).
    std::vector<std::tuple<long long, long long, long long>> entries;

    long long mult(long long i, long long j) const {
        for (const auto& [ei, ej, m] : entries)
            if (ei == i && ej == j) return m;
        return 0;
    }

    /// m_i = sum_j m_ij.
    long long row_total(long long i) const {
        long long s = 0;
        for (const auto& [ei, ej, m] : entries)
            if (ei == i) s += m;
        return s;
    }

    /// r_i = i * sum_j j*m_ij.
    long long row_weight(long long i) const {
        long long s = 0;
        for (const auto& [ei, ej, m] : entries)
            if (ei == i) s += j_weight(ej, m);
        return i * s;
    }

    bool is_partition() const {
        for (const auto& e : entries)
            if (std::get<1>(e) >= 2) return false;
        return true;
    }

    bool operator==(const MultiplicityArray& o) const { return r == o.r && entries == o.entries; }

private:
    static long long j_weight(long long j, long long m) { return j * m; }
};

/// Row i of a multiplicity array together with its weight r_i.
struct RowSlice {
    long long i = 0;
    /// j -> m_ij, sorted by j, zeros absent.
    std::vector<std::pair<long long, long long>> multiplicities;
    long long r_i = 0;
};

inline RowSlice row_slice(const MultiplicityArray& M, long long i) {
    RowSlice s;
    s.i = i;
    for (const auto& [ei, ej, m] : M.entries) {
        if (ei != i) continue;
        s.multiplicities.emplace_back(ej, m);
        s.r_i += i * ej * m;
    }
    return s;
}

/// All multiplicity arrays of weight r, in lexicographic order of their
/// sorted (i, j, m) entry lists. Each array appears exactly once.
inline std::vector<MultiplicityArray> enumerate_marrays(long long r) {
    if (r < 0) throw std::invalid_argument("multiplicity array weight must be nonnegative");
    std::vector<std::pair<long long, long long>> keys;
    for (long long i = 1; i <= r; ++i)
        for (long long j = 1; i * j <= r; ++j) keys.emplace_back(i, j);
    std::sort(keys.begin(), keys.end());

    std::vector<MultiplicityArray> out;
    MultiplicityArray cur;
    cur.r = r;
    auto rec = [&](auto&& self, size_t idx, long long rem) -> void {
        if (rem == 0) {
            out.push_back(cur);
            return;
        }
        if (idx == keys.size()) return;
        auto [i, j] = keys[idx];
        long long w = i * j;
        for (long long m = rem / w; m >= 1; --m) {
            cur.entries.emplace_back(i, j, m);
            self(self, idx + 1, rem - m * w);
            cur.entries.pop_back();
        }
        self(self, idx + 1, rem);
    };
    rec(rec, 0, r);
    std::sort(out.begin(), out.end(), [](const MultiplicityArray& a, const MultiplicityArray& b) {
        return a.entries < b.entries;
    });
    return out;
}

/// The subset of enumerate_marrays(r) with all multiplicities j = 1;
/// in bijection with the integer partitions of r (m_i1 parts of size i).
inline std::vector<MultiplicityArray> enumerate_partitions(long long r) {
    if (r < 0) throw std::invalid_argument("partition weight must be nonnegative");
    std::vector<MultiplicityArray> out;
    MultiplicityArray cur;
    cur.r = r;
    auto rec = [&](auto&& self, long long part, long long rem) -> void {
        if (rem == 0) {
            out.push_back(cur);
            return;
        }
        if (part > rem) return;
        self(self, part + 1, rem);
        for (long long m = 1; m * part <= rem; ++m) {
            cur.entries.emplace_back(part, 1, m);
            self(self, part + 1, rem - m * part);
            cur.entries.pop_back();
        }
    };
    // Builds entry lists ascending in i; re-sort output to the shared order.
    rec(rec, 1, r);
    std::sort(out.begin(), out.end(), [](const MultiplicityArray& a, const MultiplicityArray& b) {
        return a.entries < b.entries;
    });
    return out;
}

/// A weight attached to part size k: a polynomial in the part count m,
/// given by ascending coefficients.
struct PartWeight {
    long long k = 1;
    std::vector<BigRational> poly;

    BigRational operator()(long long m) const {
        BigRational x(m), acc = BigRational::zero();
        for (auto it = poly.rbegin(); it != poly.rend(); ++it) acc = acc * x + *it;
        return acc;
    }
};

/// Sum over the partitions of r of (product of the weights, each applied
/// to its part count) * product_i 1/(i^m_i1 * m_i1!). With no weights the
/// sum collapses to 1 for every r.
inline BigRational weighted_partition_sum(long long r, const std::vector<PartWeight>& weights = {}) {
    if (r < 1) throw std::invalid_argument("weighted partition sum needs r >= 1");
    if (weights.size() > 2)
        throw std::invalid_argument("weighted partition sum supports at most two weights");
    BigRational total = BigRational::zero();
    for (const auto& M : enumerate_partitions(r)) {
        BigRational term = BigRational::one();
        for (const auto& w : weights) term *= w(M.mult(w.k, 1));
        for (const auto& [i, j, m] : M.entries) {
            (void)j;
            term *= BigRational(i).pow(m).inverse();
            term /= factorial_rational(m);
        }
        total += term;
    }
    return total;
}

}  // namespace cycliq
