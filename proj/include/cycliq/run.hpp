#pragma once

#include <ostream>
#include <string>

#include "cycliq/census.hpp"
#include "cycliq/genfun.hpp"
#include "cycliq/io_json.hpp"
#include "cycliq/qcontext.hpp"

namespace cycliq {

enum class Command { series, limit, expand, census, verify, tlambda };
enum class Mode { numeric, symbolic };
enum class Format { json, csv };

/// All computations are deterministic; there is no seed anywhere.
struct RunConfig {
    Command command = Command::series;
    Ambient group = Ambient::group;
    long long r = 0;
    long long n = 0;
    long long q = 0;
    long long order = 16;
    Mode mode = Mode::symbolic;
    Format format = Format::json;
    bool invertible = false;
    bool approx = false;
    long long max_enumeration = 100000000;
    int shards = 0;
};

namespace detail {

inline bool is_prime(long long v) {
    if (v < 2) return false;
    for (long long d = 2; d * d <= v; ++d)
        if (v % d == 0) return false;
    return true;
}

inline std::string group_name(Ambient g) { return g == Ambient::group ? "gl" : "m"; }

inline void emit(std::ostream& out, const json& doc, Format format) {
    if (format == Format::json) {
        out << doc.dump(2) << "\n";
        return;
    }
    // CSV: one row per coefficient/count under a mandatory header.
    const std::string& cmd = doc.at("command").get_ref<const std::string&>();
    if (cmd == "series") {
        out << "n,coefficient\n";
        const json& coeffs = doc.at("series").at("coeffs");
        for (size_t k = 0; k < coeffs.size(); ++k) {
            if (coeffs[k].is_string())
                out << k << "," << coeffs[k].get<std::string>() << "\n";
            else
                out << k << "," << doc.at("csv_coeffs")[k].get<std::string>() << "\n";
        }
    } else if (cmd == "expand") {
        out << "exponent,coefficient\n";
        const json& coeffs = doc.at("expansion").at("coeffs");
        for (size_t k = 0; k < coeffs.size(); ++k)
            out << k << "," << coeffs[k].get<std::string>() << "\n";
    } else if (cmd == "census") {
        out << "q,n,r,invertible_only,total,cyclic\n";
        out << doc.at("q") << "," << doc.at("n") << "," << doc.at("r") << ","
            << (doc.at("invertible_only").get<bool>() ? "true" : "false") << ","
            << doc.at("total") << "," << doc.at("cyclic") << "\n";
    } else {
        out << "quantity,value\n";
        for (auto it = doc.begin(); it != doc.end(); ++it) {
            if (it.key() == "command" || !it->is_primitive()) continue;
            out << it.key() << "," << (it->is_string() ? it->get<std::string>() : it->dump()) << "\n";
        }
    }
}

}  // namespace detail

/// Execute one command. Exit status 0 on success, 1 on a violated
/// precondition (diagnostic on err), 2 on a verification mismatch.
inline int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    using detail::emit;
    try {
        const bool census_like = cfg.command == Command::census || cfg.command == Command::verify ||
                                 cfg.command == Command::tlambda;
        if (census_like) {
            if (cfg.mode == Mode::symbolic) {
                err << "precondition violated: symbolic mode forbids census-style commands\n";
                return 1;
            }
            if (!detail::is_prime(cfg.q) || cfg.q > 7) {
                err << "precondition violated: census commands need a prime q <= 7\n";
                return 1;
            }
            if (cfg.r < 1 || cfg.r >= cfg.n) {
                err << "precondition violated: census commands need 1 <= r < n\n";
                return 1;
            }
        }
        if (cfg.mode == Mode::numeric && cfg.q < 2) {
            err << "precondition violated: numeric mode needs q >= 2\n";
            return 1;
        }
        if (cfg.order < 0) {
            err << "precondition violated: order must be nonnegative\n";
            return 1;
        }
        if (cfg.r < 0) {
            err << "precondition violated: r must be nonnegative\n";
            return 1;
        }

        switch (cfg.command) {
            case Command::series: {
                json doc{{"command", "series"},
                         {"group", detail::group_name(cfg.group)},
                         {"r", cfg.r},
                         {"order", cfg.order},
                         {"mode", cfg.mode == Mode::numeric ? "numeric" : "symbolic"}};
                if (cfg.mode == Mode::numeric) {
                    NumericQ ctx(cfg.q);
                    auto s = cfg.group == Ambient::group ? stab_cyclic_series_gl(ctx, cfg.r, cfg.order)
                                                         : stab_cyclic_series_m(ctx, cfg.r, cfg.order);
                    doc["q"] = cfg.q;
                    doc["series"] = render_series(s);
                    if (cfg.approx) {
                        json approx = json::array();
                        for (const auto& c : s.coeffs()) approx.push_back(c.to_double());
                        doc["approx_coeffs"] = approx;
                    }
                } else {
                    SymbolicQ ctx;
                    auto s = cfg.group == Ambient::group ? stab_cyclic_series_gl(ctx, cfg.r, cfg.order)
                                                         : stab_cyclic_series_m(ctx, cfg.r, cfg.order);
                    doc["series"] = render_series(s);
                    json compact = json::array();
                    for (const auto& c : s.coeffs()) compact.push_back(render_qrf_compact(c));
                    doc["csv_coeffs"] = compact;
                }
                emit(out, doc, cfg.format);
                return 0;
            }
            case Command::limit: {
                LimitValue lim = cfg.group == Ambient::group ? stab_limit_gl(cfg.r) : stab_limit_m(cfg.r);
                json doc{{"command", "limit"},
                         {"group", detail::group_name(cfg.group)},
                         {"r", cfg.r},
                         {"rational", render_qrational_function(lim.rational)},
                         {"euler_factor",
                          lim.euler == EulerFactorCount::none ? "none" : "infinite"}};
                if (cfg.format == Format::csv) {
                    out << "quantity,value\n";
                    out << "rational," << render_qrf_compact(lim.rational) << "\n";
                    out << "euler_factor," << (lim.euler == EulerFactorCount::none ? "none" : "infinite")
                        << "\n";
                } else {
                    out << doc.dump(2) << "\n";
                }
                return 0;
            }
            case Command::expand: {
                QinvSeries s = cfg.group == Ambient::group
                                   ? stab_limit_gl_expansion(cfg.r, cfg.order)
                                   : stab_limit_m_expansion(cfg.r, cfg.order);
                json doc{{"command", "expand"},
                         {"group", detail::group_name(cfg.group)},
                         {"r", cfg.r},
                         {"order", cfg.order},
                         {"expansion", render_qinv_series(s)}};
                if (cfg.approx && cfg.q >= 2) {
                    doc["approx_at_q"] = cfg.q;
                    doc["approx"] = s.eval(BigRational(cfg.q)).to_double();
                }
                emit(out, doc, cfg.format);
                return 0;
            }
            case Command::census: {
                CensusResult res =
                    census(cfg.q, cfg.n, cfg.r, cfg.invertible, cfg.max_enumeration, cfg.shards);
                json doc = render_census(res);
                doc["command"] = "census";
                if (cfg.approx)
                    doc["approx_proportion"] =
                        (BigRational(res.cyclic) / BigRational(res.total)).to_double();
                emit(out, doc, cfg.format);
                return 0;
            }
            case Command::verify: {
                CensusResult res =
                    census(cfg.q, cfg.n, cfg.r, cfg.invertible, cfg.max_enumeration, cfg.shards);
                NumericQ ctx(cfg.q);
                BigRational predicted =
                    cfg.invertible ? stab_cyclic_series_gl(ctx, cfg.r, cfg.n).coeff(cfg.n)
                                   : stab_cyclic_proportion_m(ctx, cfg.r, cfg.n);
                BigRational observed = BigRational(res.cyclic) / BigRational(res.total);
                bool match = predicted == observed;
                json doc{{"command", "verify"},
                         {"q", cfg.q},
                         {"n", cfg.n},
                         {"r", cfg.r},
                         {"invertible_only", cfg.invertible},
                         {"total", res.total},
                         {"cyclic", res.cyclic},
                         {"census_proportion", observed.to_string()},
                         {"series_proportion", predicted.to_string()},
                         {"verdict", match ? "PASS" : "FAIL"}};
                if (cfg.approx) doc["approx_proportion"] = observed.to_double();
                emit(out, doc, cfg.format);
                return match ? 0 : 2;
            }
            case Command::tlambda: {
                TLambdaFamily fam = t_lambda_family(cfg.q, cfg.n, cfg.r, cfg.max_enumeration);
                long long lead = 1;
                for (long long k = 0; k < cfg.n * cfg.n + cfg.r * cfg.r - cfg.r * cfg.n - 3; ++k)
                    lead *= cfg.q;
                long long cap_bound = 1;
                for (long long k = 0; k < cfg.n * cfg.n + cfg.r * cfg.r - cfg.r * cfg.n - 6; ++k)
                    cap_bound *= cfg.q;
                bool ok = true;
                json lambdas = json::array();
                for (const auto& lr : fam.per_lambda) {
                    if (!lr.all_noncyclic) ok = false;
                    lambdas.push_back(json{{"lambda", lr.lambda},
                                           {"members", lr.members},
                                           {"all_noncyclic", lr.all_noncyclic},
                                           {"eigenspace_dim_gt2", lr.eigenspace_dim_gt2},
                                           {"leading_bound_2x", 2 * lead},
                                           {"within_leading_bound", lr.members <= 2 * lead}});
                }
                json inters = json::array();
                for (const auto& iv : fam.intersections) {
                    if (iv.size > cap_bound) ok = false;
                    inters.push_back(json{{"lambda", iv.lambda},
                                          {"gamma", iv.gamma},
                                          {"size", iv.size},
                                          {"bound", cap_bound},
                                          {"within_bound", iv.size <= cap_bound}});
                }
                json doc{{"command", "tlambda"}, {"q", cfg.q},
                         {"n", cfg.n},           {"r", cfg.r},
                         {"group_order", fam.group_order}, {"lambdas", lambdas},
                         {"intersections", inters},        {"verdict", ok ? "PASS" : "FAIL"}};
                if (cfg.format == Format::csv) {
                    out << "quantity,value\n";
                    for (const auto& lr : fam.per_lambda) {
                        out << "members_lambda_" << lr.lambda << "," << lr.members << "\n";
                        out << "all_noncyclic_lambda_" << lr.lambda << ","
                            << (lr.all_noncyclic ? "true" : "false") << "\n";
                        out << "eigenspace_dim_gt2_lambda_" << lr.lambda << ","
                            << lr.eigenspace_dim_gt2 << "\n";
                    }
                    for (const auto& iv : fam.intersections)
                        out << "intersection_" << iv.lambda << "_" << iv.gamma << "," << iv.size
                            << "\n";
                    out << "verdict," << (ok ? "PASS" : "FAIL") << "\n";
                } else {
                    out << doc.dump(2) << "\n";
                }
                return ok ? 0 : 2;
            }
        }
    } catch (const std::exception& ex) {
        err << "precondition violated: " << ex.what() << "\n";
        return 1;
    }
    err << "precondition violated: unknown command\n";
    return 1;
}

}  // namespace cycliq
