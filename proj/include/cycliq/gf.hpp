#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace cycliq {

/// Prime field F_p for small p; entries are canonical representatives
/// 0..p-1 stored in bytes.
struct PrimeField {
    int p = 2;

    explicit PrimeField(int prime) : p(prime) {
        if (prime < 2 || prime > 7) throw std::invalid_argument("prime field size must be in [2, 7]");
        for (int d = 2; d * d <= prime; ++d)
            if (prime % d == 0) throw std::invalid_argument("field size must be prime");
    }

    int add(int a, int b) const { return (a + b) % p; }
    int sub(int a, int b) const { return (a - b % p + p) % p; }
    int mul(int a, int b) const { return (a * b) % p; }
    int neg(int a) const { return (p - a % p) % p; }
    int inv(int a) const {
        a %= p;
        if (a == 0) throw std::domain_error("inverse of zero field element");
        for (int x = 1; x < p; ++x)
            if (a * x % p == 1) return x;
        throw std::logic_error("unreachable");
    }

    bool operator==(const PrimeField& o) const { return p == o.p; }
};

/// Polynomial over F_p, coefficients ascending, trimmed.
class GFPoly {
public:
    explicit GFPoly(PrimeField f) : f_(f) {}
    GFPoly(PrimeField f, std::vector<uint8_t> coeffs) : f_(f), c_(std::move(coeffs)) { trim(); }

    static GFPoly monomial(PrimeField f, int coeff, long long deg) {
        std::vector<uint8_t> c(static_cast<size_t>(deg) + 1, 0);
        c.back() = static_cast<uint8_t>(coeff % f.p);
        return GFPoly(f, std::move(c));
    }
    static GFPoly constant(PrimeField f, int v) { return GFPoly(f, {static_cast<uint8_t>(v % f.p)}); }

    const PrimeField& field() const { return f_; }
    const std::vector<uint8_t>& coeffs() const { return c_; }
    long long degree() const { return static_cast<long long>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }
    int coeff(long long k) const {
        if (k < 0 || k >= static_cast<long long>(c_.size())) return 0;
        return c_[static_cast<size_t>(k)];
    }

    GFPoly operator+(const GFPoly& o) const {
        std::vector<uint8_t> c(std::max(c_.size(), o.c_.size()), 0);
        for (size_t k = 0; k < c.size(); ++k)
            c[k] = static_cast<uint8_t>(f_.add(k < c_.size() ? c_[k] : 0, k < o.c_.size() ? o.c_[k] : 0));
        return GFPoly(f_, std::move(c));
    }
    GFPoly operator-(const GFPoly& o) const {
        std::vector<uint8_t> c(std::max(c_.size(), o.c_.size()), 0);
        for (size_t k = 0; k < c.size(); ++k)
            c[k] = static_cast<uint8_t>(f_.sub(k < c_.size() ? c_[k] : 0, k < o.c_.size() ? o.c_[k] : 0));
        return GFPoly(f_, std::move(c));
    }
    GFPoly operator*(const GFPoly& o) const {
        if (is_zero() || o.is_zero()) return GFPoly(f_);
        std::vector<uint8_t> c(c_.size() + o.c_.size() - 1, 0);
        for (size_t a = 0; a < c_.size(); ++a) {
            if (!c_[a]) continue;
            for (size_t b = 0; b < o.c_.size(); ++b)
                c[a + b] = static_cast<uint8_t>((c[a + b] + c_[a] * o.c_[b]) % f_.p);
        }
        return GFPoly(f_, std::move(c));
    }

    std::pair<GFPoly, GFPoly> divmod(const GFPoly& d) const {
        if (d.is_zero()) throw std::domain_error("polynomial division by zero");
        GFPoly rem = *this;
        long long dq = degree() - d.degree();
        if (dq < 0) return {GFPoly(f_), rem};
        std::vector<uint8_t> quot(static_cast<size_t>(dq) + 1, 0);
        int lead_inv = f_.inv(d.c_.back());
        while (!rem.is_zero() && rem.degree() >= d.degree()) {
            long long k = rem.degree() - d.degree();
            int fct = f_.mul(rem.c_.back(), lead_inv);
            quot[static_cast<size_t>(k)] = static_cast<uint8_t>(fct);
            for (size_t t = 0; t < d.c_.size(); ++t)
                rem.c_[static_cast<size_t>(k) + t] =
                    static_cast<uint8_t>(f_.sub(rem.c_[static_cast<size_t>(k) + t], f_.mul(fct, d.c_[t])));
            rem.trim();
        }
        return {GFPoly(f_, std::move(quot)), rem};
    }

    bool divides(const GFPoly& h) const { return h.divmod(*this).second.is_zero(); }

    GFPoly monic() const {
        if (is_zero() || c_.back() == 1) return *this;
        int s = f_.inv(c_.back());
        std::vector<uint8_t> c(c_);
        for (auto& x : c) x = static_cast<uint8_t>(f_.mul(x, s));
        return GFPoly(f_, std::move(c));
    }

    static GFPoly gcd(GFPoly a, GFPoly b) {
        while (!b.is_zero()) {
            GFPoly r = a.divmod(b).second;
            a = std::move(b);
            b = std::move(r);
        }
        return a.monic();
    }

    static GFPoly lcm(const GFPoly& a, const GFPoly& b) {
        if (a.is_zero() || b.is_zero()) return GFPoly(a.f_);
        GFPoly g = gcd(a, b);
        return (a * b).divmod(g).first.monic();
    }

    int eval(int x) const {
        int acc = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = (acc * x + *it) % f_.p;
        return acc;
    }

    /// Trial division by all monic polynomials of degree up to deg/2.
    bool is_irreducible() const {
        long long d = degree();
        if (d < 1) return false;
        if (d == 1) return true;
        for (long long e = 1; 2 * e <= d; ++e)
            for (const GFPoly& cand : all_monic(f_, e))
                if (cand.divides(*this)) return false;
        return true;
    }

    /// All monic polynomials of the exact degree, ordered by their
    /// base-p coefficient encoding.
    static std::vector<GFPoly> all_monic(PrimeField f, long long deg) {
        if (deg < 0) throw std::invalid_argument("monic enumeration needs a nonnegative degree");
        std::vector<GFPoly> out;
        long long count = 1;
        for (long long k = 0; k < deg; ++k) count *= f.p;
        out.reserve(static_cast<size_t>(count));
        for (long long code = 0; code < count; ++code) {
            std::vector<uint8_t> c(static_cast<size_t>(deg) + 1, 0);
            long long rest = code;
            for (long long k = 0; k < deg; ++k) {
                c[static_cast<size_t>(k)] = static_cast<uint8_t>(rest % f.p);
                rest /= f.p;
            }
            c.back() = 1;
            out.emplace_back(f, std::move(c));
        }
        return out;
    }

    bool operator==(const GFPoly& o) const { return f_.p == o.f_.p && c_ == o.c_; }
    bool operator!=(const GFPoly& o) const { return !(*this == o); }

    std::string to_string() const {
        if (is_zero()) return "0";
        std::string s;
        for (long long k = degree(); k >= 0; --k) {
            int v = c_[static_cast<size_t>(k)];
            if (!v) continue;
            if (!s.empty()) s += " + ";
            if (k == 0 || v != 1) s += std::to_string(v);
            if (k > 0) {
                if (v != 1) s += "*";
                s += "t";
                if (k > 1) s += "^" + std::to_string(k);
            }
        }
        return s;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    PrimeField f_;
    std::vector<uint8_t> c_;
};

/// Dense square matrix over F_p acting on row vectors from the right
/// (w -> wA), so invariance of the span of the first r basis vectors
/// means a zero top-right r x (n-r) block.
class GFMatrix {
public:
    GFMatrix(PrimeField f, int n) : f_(f), n_(n), e_(static_cast<size_t>(n) * n, 0) {}

    static GFMatrix identity(PrimeField f, int n) {
        GFMatrix m(f, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    /// Companion matrix of a monic polynomial, cyclic by construction.
    static GFMatrix companion(const GFPoly& p) {
        if (!p.is_monic() || p.degree() < 1)
            throw std::invalid_argument("companion matrix needs a monic polynomial of degree >= 1");
        int n = static_cast<int>(p.degree());
        GFMatrix m(p.field(), n);
        for (int i = 0; i + 1 < n; ++i) m.at(i, i + 1) = 1;
        for (int j = 0; j < n; ++j) m.at(n - 1, j) = static_cast<uint8_t>(p.field().neg(p.coeff(j)));
        return m;
    }

    const PrimeField& field() const { return f_; }
    int dim() const { return n_; }
    uint8_t& at(int i, int j) { return e_[static_cast<size_t>(i) * n_ + j]; }
    uint8_t at(int i, int j) const { return e_[static_cast<size_t>(i) * n_ + j]; }
    const std::vector<uint8_t>& entries() const { return e_; }

    GFMatrix operator*(const GFMatrix& o) const {
        GFMatrix r(f_, n_);
        for (int i = 0; i < n_; ++i)
            for (int k = 0; k < n_; ++k) {
                int a = at(i, k);
                if (!a) continue;
                for (int j = 0; j < n_; ++j)
                    r.at(i, j) = static_cast<uint8_t>((r.at(i, j) + a * o.at(k, j)) % f_.p);
            }
        return r;
    }

    GFMatrix transpose() const {
        GFMatrix r(f_, n_);
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j) r.at(j, i) = at(i, j);
        return r;
    }

    /// Row vector action w -> wA.
    std::vector<uint8_t> apply_row(const std::vector<uint8_t>& w) const {
        std::vector<uint8_t> out(static_cast<size_t>(n_), 0);
        for (int i = 0; i < n_; ++i) {
            int a = w[static_cast<size_t>(i)];
            if (!a) continue;
            for (int j = 0; j < n_; ++j)
                out[static_cast<size_t>(j)] = static_cast<uint8_t>((out[static_cast<size_t>(j)] + a * at(i, j)) % f_.p);
        }
        return out;
    }

    int rank() const {
        std::vector<std::vector<int>> rows(static_cast<size_t>(n_), std::vector<int>(static_cast<size_t>(n_)));
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j) rows[i][j] = at(i, j);
        int rank = 0;
        for (int col = 0; col < n_ && rank < n_; ++col) {
            int pivot = -1;
            for (int i = rank; i < n_; ++i)
                if (rows[i][col]) {
                    pivot = i;
                    break;
                }
            if (pivot < 0) continue;
            std::swap(rows[rank], rows[pivot]);
            int inv = f_.inv(rows[rank][col]);
            for (int j = 0; j < n_; ++j) rows[rank][j] = rows[rank][j] * inv % f_.p;
            for (int i = 0; i < n_; ++i) {
                if (i == rank || !rows[i][col]) continue;
                int s = rows[i][col];
                for (int j = 0; j < n_; ++j) rows[i][j] = (rows[i][j] - s * rows[rank][j] % f_.p + f_.p) % f_.p;
            }
            ++rank;
        }
        return rank;
    }

    bool is_invertible() const { return rank() == n_; }

    GFMatrix inverse() const {
        std::vector<std::vector<int>> m(static_cast<size_t>(n_), std::vector<int>(2 * static_cast<size_t>(n_), 0));
        for (int i = 0; i < n_; ++i) {
            for (int j = 0; j < n_; ++j) m[i][j] = at(i, j);
            m[i][static_cast<size_t>(n_) + i] = 1;
        }
        for (int col = 0; col < n_; ++col) {
            int pivot = -1;
            for (int i = col; i < n_; ++i)
                if (m[i][col]) {
                    pivot = i;
                    break;
                }
            if (pivot < 0) throw std::domain_error("matrix is singular");
            std::swap(m[col], m[pivot]);
            int inv = f_.inv(m[col][col]);
            for (int j = 0; j < 2 * n_; ++j) m[col][j] = m[col][j] * inv % f_.p;
            for (int i = 0; i < n_; ++i) {
                if (i == col || !m[i][col]) continue;
                int s = m[i][col];
                for (int j = 0; j < 2 * n_; ++j) m[i][j] = (m[i][j] - s * m[col][j] % f_.p + f_.p) % f_.p;
            }
        }
        GFMatrix r(f_, n_);
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j) r.at(i, j) = static_cast<uint8_t>(m[i][static_cast<size_t>(n_) + j]);
        return r;
    }

    /// Base-p encoding of the entry list; injective for q^(n^2) < 2^64.
    uint64_t encode() const {
        uint64_t code = 0;
        for (auto it = e_.rbegin(); it != e_.rend(); ++it) code = code * f_.p + *it;
        return code;
    }

    bool operator==(const GFMatrix& o) const { return n_ == o.n_ && f_.p == o.f_.p && e_ == o.e_; }
    bool operator!=(const GFMatrix& o) const { return !(*this == o); }

private:
    PrimeField f_;
    int n_;
    std::vector<uint8_t> e_;
};

/// Characteristic polynomial det(tI - A) by the Berkowitz scheme:
/// division-free, so valid over any field.
inline GFPoly char_poly(const GFMatrix& A) {
    const PrimeField& f = A.field();
    int n = A.dim();
    if (n == 0) return GFPoly::constant(f, 1);

    // poly holds the characteristic polynomial of the leading k x k
    // principal submatrix, coefficients from t^k down to t^0.
    std::vector<int> poly{1};
    for (int k = 1; k <= n; ++k) {
        // Toeplitz column: T[0] = 1, T[1] = -a_kk, T[j] = -(R M^{j-2} C).
        std::vector<int> T(static_cast<size_t>(k) + 1, 0);
        T[0] = 1;
        T[1] = f.neg(A.at(k - 1, k - 1));
        std::vector<int> v(static_cast<size_t>(k) - 1);
        for (int i = 0; i + 1 < k; ++i) v[static_cast<size_t>(i)] = A.at(i, k - 1);  // column C
        for (int j = 2; j <= k; ++j) {
            int dot = 0;
            for (int i = 0; i + 1 < k; ++i) dot = (dot + A.at(k - 1, i) * v[static_cast<size_t>(i)]) % f.p;
            T[static_cast<size_t>(j)] = f.neg(dot);
            if (j < k) {
                std::vector<int> nv(static_cast<size_t>(k) - 1, 0);
                for (int i = 0; i + 1 < k; ++i) {
                    if (!v[static_cast<size_t>(i)]) continue;
                    for (int i2 = 0; i2 + 1 < k; ++i2)
                        nv[static_cast<size_t>(i2)] =
                            (nv[static_cast<size_t>(i2)] + A.at(i2, i) * v[static_cast<size_t>(i)]) % f.p;
                }
                v = std::move(nv);
            }
        }
        std::vector<int> next(static_cast<size_t>(k) + 1, 0);
        for (size_t a = 0; a < T.size(); ++a) {
            if (!T[a]) continue;
            for (size_t b = 0; b < poly.size() && a + b < next.size(); ++b)
                next[a + b] = (next[a + b] + T[a] * poly[b]) % f.p;
        }
        poly = std::move(next);
    }
    std::vector<uint8_t> asc(static_cast<size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) asc[static_cast<size_t>(k)] = static_cast<uint8_t>(poly[static_cast<size_t>(n - k)]);
    return GFPoly(f, std::move(asc));
}

/// Minimal polynomial: for each standard basis vector, the least monic
/// annihilator of its Krylov sequence, combined by lcm. Stops early once
/// full degree is reached.
inline GFPoly min_poly(const GFMatrix& A) {
    const PrimeField& f = A.field();
    int n = A.dim();
    GFPoly m = GFPoly::constant(f, 1);
    for (int start = 0; start < n && m.degree() < n; ++start) {
        // Echelon basis of the Krylov span, each row tagged with the
        // combination of v, vA, vA^2, ... it came from.
        std::vector<std::vector<int>> basis;
        std::vector<std::vector<int>> combo;
        std::vector<int> pivot_col;
        std::vector<uint8_t> v(static_cast<size_t>(n), 0);
        v[static_cast<size_t>(start)] = 1;
        int step = 0;
        while (true) {
            std::vector<int> red(v.begin(), v.end());
            std::vector<int> cmb(static_cast<size_t>(step) + 1, 0);
            cmb[static_cast<size_t>(step)] = 1;
            for (size_t b = 0; b < basis.size(); ++b) {
                int c = red[static_cast<size_t>(pivot_col[b])];
                if (!c) continue;
                for (int j = 0; j < n; ++j)
                    red[static_cast<size_t>(j)] = (red[static_cast<size_t>(j)] - c * basis[b][static_cast<size_t>(j)] % f.p + f.p) % f.p;
                for (size_t t = 0; t < combo[b].size(); ++t)
                    cmb[t] = (cmb[t] - c * combo[b][t] % f.p + f.p) % f.p;
            }
            int pc = -1;
            for (int j = 0; j < n; ++j)
                if (red[static_cast<size_t>(j)]) {
                    pc = j;
                    break;
                }
            if (pc < 0) {
                // v A^step = sum of earlier iterates: cmb gives the
                // annihilator coefficients directly.
                std::vector<uint8_t> pc2(cmb.size());
                for (size_t t = 0; t < cmb.size(); ++t) pc2[t] = static_cast<uint8_t>(cmb[t]);
                GFPoly ann(f, std::move(pc2));
                m = GFPoly::lcm(m, ann.monic());
                break;
            }
            int inv = f.inv(red[static_cast<size_t>(pc)]);
            for (int j = 0; j < n; ++j) red[static_cast<size_t>(j)] = red[static_cast<size_t>(j)] * inv % f.p;
            for (auto& c : cmb) c = c * inv % f.p;
            basis.push_back(std::move(red));
            combo.push_back(std::move(cmb));
            pivot_col.push_back(pc);
            v = A.apply_row(v);
            ++step;
        }
    }
    return m;
}

inline bool is_cyclic(const GFMatrix& A) { return min_poly(A).degree() == A.dim(); }

}  // namespace cycliq
