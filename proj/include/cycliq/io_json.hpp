#pragma once

#include <string>

#include <json.hpp>

#include "cycliq/census.hpp"
#include "cycliq/marrays.hpp"
#include "cycliq/qinv_series.hpp"
#include "cycliq/qrational_function.hpp"
#include "cycliq/rational.hpp"
#include "cycliq/trunc_series.hpp"

namespace cycliq {

using json = nlohmann::json;

inline std::string render_rational(const BigRational& r) { return r.to_string(); }
inline BigRational parse_rational(const std::string& s) { return BigRational::from_string(s); }

/// Ascending coefficient list, each entry a "num/den" string.
inline json render_qpolynomial(const QPolynomial& p) {
    json arr = json::array();
    for (const auto& c : p.coeffs()) arr.push_back(render_rational(c));
    return arr;
}

inline QPolynomial parse_qpolynomial(const json& arr) {
    std::vector<BigRational> c;
    for (const auto& item : arr) c.push_back(parse_rational(item.get<std::string>()));
    return QPolynomial(std::move(c));
}

inline json render_qrational_function(const QRationalFunction& f) {
    return json{{"num", render_qpolynomial(f.num())}, {"den", render_qpolynomial(f.den())}};
}

inline QRationalFunction parse_qrational_function(const json& j) {
    return QRationalFunction(parse_qpolynomial(j.at("num")), parse_qpolynomial(j.at("den")));
}

/// Dense rendering from exponent 0, zeros padded below the offset.
inline json render_qinv_series(const QinvSeries& s) {
    json coeffs = json::array();
    for (const auto& c : s.dense()) coeffs.push_back(render_rational(c));
    return json{{"offset", s.offset()}, {"order", s.order()}, {"coeffs", coeffs}};
}

inline json render_series(const TruncSeries<BigRational>& s) {
    json coeffs = json::array();
    for (const auto& c : s.coeffs()) coeffs.push_back(render_rational(c));
    return json{{"order", s.order()}, {"coeffs", coeffs}};
}

inline json render_series(const TruncSeries<QRationalFunction>& s) {
    json coeffs = json::array();
    for (const auto& c : s.coeffs()) coeffs.push_back(render_qrational_function(c));
    return json{{"order", s.order()}, {"coeffs", coeffs}};
}

inline json render_census(const CensusResult& c) {
    return json{{"q", c.q},         {"n", c.n},
                {"r", c.r},         {"invertible_only", c.invertible_only},
                {"total", c.total}, {"cyclic", c.cyclic}};
}

inline CensusResult parse_census(const json& j) {
    return CensusResult{j.at("q").get<long long>(),     j.at("n").get<long long>(),
                        j.at("r").get<long long>(),     j.at("invertible_only").get<bool>(),
                        j.at("total").get<long long>(), j.at("cyclic").get<long long>()};
}

/// {"r": r, "entries": [[i, j, m], ...]} sorted by (i, j).
inline json render_marray(const MultiplicityArray& M) {
    json entries = json::array();
    for (const auto& [i, j, m] : M.entries) entries.push_back(json::array({i, j, m}));
    return json{{"r", M.r}, {"entries", entries}};
}

/// Compact one-cell form for CSV output: "(n0;n1;...)/(d0;d1;...)".
inline std::string render_qrf_compact(const QRationalFunction& f) {
    auto list = [](const QPolynomial& p) {
        if (p.is_zero()) return std::string("0");
        std::string s;
        for (size_t k = 0; k < p.coeffs().size(); ++k) {
            if (k) s += ";";
            s += p.coeffs()[k].to_string();
        }
        return s;
    };
    return "(" + list(f.num()) + ")/(" + list(f.den()) + ")";
}

}  // namespace cycliq
