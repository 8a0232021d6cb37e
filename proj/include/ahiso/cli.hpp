#pragma once

// Command-line front end.  run() is callable in-process so the whole
// surface is testable without spawning; the binary in tools/ is a thin
// wrapper.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ahiso/counterexample.hpp"
#include "ahiso/errors.hpp"
#include "ahiso/imcf.hpp"
#include "ahiso/isoprofile.hpp"
#include "ahiso/metric.hpp"
#include "ahiso/metric_io.hpp"
#include "ahiso/numerics.hpp"
#include "ahiso/quantities.hpp"

namespace ahiso::cli {

namespace detail {

inline std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

// Area arguments accept plain literals and the suffix form "Npi".
inline double parse_real(const std::string& text) {
    std::string body = text;
    double factor = 1.0;
    if (body.size() >= 2 && body.compare(body.size() - 2, 2, "pi") == 0) {
        factor = kPi;
        body = body.substr(0, body.size() - 2);
        if (body.empty()) body = "1";
    }
    std::size_t pos = 0;
    double value = 0.0;
    try {
        value = std::stod(body, &pos);
    } catch (const std::exception&) {
        throw DomainError("cannot parse number '" + text + "'");
    }
    if (pos != body.size())
        throw DomainError("cannot parse number '" + text + "'");
    return value * factor;
}

// "lo:hi:n" -> n log-spaced points.
inline std::vector<double> parse_range(const std::string& text) {
    const auto c1 = text.find(':');
    const auto c2 = text.find(':', c1 == std::string::npos ? c1 : c1 + 1);
    if (c1 == std::string::npos || c2 == std::string::npos)
        throw DomainError("range must be lo:hi:n, got '" + text + "'");
    const double lo = parse_real(text.substr(0, c1));
    const double hi = parse_real(text.substr(c1 + 1, c2 - c1 - 1));
    const long n = std::lround(parse_real(text.substr(c2 + 1)));
    if (!(lo > 0.0) || !(hi >= lo) || n < 1)
        throw DomainError("range must satisfy 0 < lo <= hi, n >= 1");
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(n));
    if (n == 1) {
        out.push_back(lo);
        return out;
    }
    for (long i = 0; i < n; ++i)
        out.push_back(lo * std::pow(hi / lo, double(i) / double(n - 1)));
    return out;
}

using Row = std::vector<std::pair<std::string, std::string>>;

// Flat reports and tables; strings are pre-formatted so CSV and JSON
// render the same digits.
inline void emit_report(std::ostream& os, const Row& fields, bool json) {
    if (json) {
        os << '{';
        bool first = true;
        for (const auto& [k, v] : fields) {
            if (!first) os << ',';
            os << '"' << k << "\":" << v;
            first = false;
        }
        os << "}\n";
        return;
    }
    for (const auto& [k, v] : fields) os << k << ',' << v << '\n';
}

inline void emit_table(std::ostream& os, const std::vector<std::string>& header,
                       const std::vector<std::vector<std::string>>& rows,
                       bool json) {
    if (json) {
        os << '[';
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r) os << ',';
            os << '{';
            for (std::size_t c = 0; c < header.size(); ++c) {
                if (c) os << ',';
                os << '"' << header[c] << "\":" << rows[r][c];
            }
            os << '}';
        }
        os << "]\n";
        return;
    }
    for (std::size_t c = 0; c < header.size(); ++c)
        os << (c ? "," : "") << header[c];
    os << '\n';
    for (const auto& row : rows) {
        for (std::size_t c = 0; c < row.size(); ++c)
            os << (c ? "," : "") << row[c];
        os << '\n';
    }
}

struct Sink {
    std::ostream* os;
    std::ofstream file;
    explicit Sink(std::ostream& fallback, const std::string& path) {
        if (path.empty()) {
            os = &fallback;
            return;
        }
        file.open(path);
        if (!file) throw DomainError("cannot write output file " + path);
        os = &file;
    }
};

}  // namespace detail

inline int run(const std::vector<std::string>& args,
               std::ostream& out = std::cout, std::ostream& err = std::cerr) {
    using detail::fmt;

    CLI::App app{"isoperimetry toolkit for asymptotically hyperbolic metrics"};
    app.require_subcommand(1);

    std::string metric_arg, areas_arg, out_path, format = "csv";
    std::string variant_arg = "full";
    double mass = 1.0, area = 4.0 * kPi, tmax = 3.0;
    double r0 = 10.0, eps = 0.1, s1 = std::sinh(11.0), bump_width = 0.4;
    long steps = 200;
    double abs_tol = default_abs_tol, rel_tol = default_rel_tol;
    std::string area_arg, metric_out;

    app.add_option("--abs-tol", abs_tol, "absolute quadrature/ODE tolerance");
    app.add_option("--rel-tol", rel_tol, "relative quadrature/ODE tolerance");

    auto add_common = [&](CLI::App* sub, bool with_metric) {
        if (with_metric)
            sub->add_option("--metric", metric_arg,
                            "metric as inline JSON or @file")
                ->required();
        sub->add_option("--out", out_path, "write output here instead of stdout");
        sub->add_option("--format", format, "csv or json")
            ->check(CLI::IsMember({"csv", "json"}));
    };

    auto* c_info = app.add_subcommand("metric-info", "metric summary");
    add_common(c_info, true);

    auto* c_quant = app.add_subcommand("quantities",
                                       "geometry of one coordinate sphere");
    add_common(c_quant, true);
    c_quant->add_option("--area", area_arg, "sphere area (accepts Npi)")
        ->required();

    auto* c_rv = app.add_subcommand("renorm-vol", "renormalized volume");
    add_common(c_rv, true);

    auto* c_imcf = app.add_subcommand("imcf", "sphere flow samples");
    add_common(c_imcf, true);
    c_imcf->add_option("--area", area_arg, "initial sphere area (accepts Npi)")
        ->required();
    c_imcf->add_option("--tmax", tmax, "flow time horizon");
    c_imcf->add_option("--steps", steps, "number of samples after t = 0");

    auto* c_prof = app.add_subcommand("profile",
                                      "coordinate ball vs generalized competitor");
    add_common(c_prof, true);
    c_prof->add_option("--areas", areas_arg, "lo:hi:n log-spaced areas")
        ->required();

    auto* c_vexp = app.add_subcommand("verify-expansion",
                                      "series residuals and fitted order");
    add_common(c_vexp, false);
    c_vexp->add_option("--mass", mass, "metric mass");
    c_vexp->add_option("--areas", areas_arg, "lo:hi:n log-spaced areas")
        ->required();
    c_vexp->add_option("--variant", variant_arg,
                       "hyperbolic, full, uniform, or perturbation")
        ->check(CLI::IsMember({"hyperbolic", "full", "uniform", "perturbation"}));

    auto* c_pexp = app.add_subcommand("profile-expansion",
                                      "mass coefficient from A_g(V)");
    add_common(c_pexp, true);
    c_pexp->add_option("--areas", areas_arg, "lo:hi:n log-spaced volumes")
        ->required();

    auto* c_cx = app.add_subcommand("counterexample",
                                    "build and verify the perturbed metric");
    add_common(c_cx, false);
    c_cx->add_option("--r0", r0, "start of the perturbed region");
    c_cx->add_option("--eps", eps, "horizon area radius");
    c_cx->add_option("--mass", mass, "exact tail mass");
    c_cx->add_option("--s1", s1, "target area radius at r0 + 1");
    c_cx->add_option("--bump-width", bump_width, "support width of the bump");
    c_cx->add_option("--areas", areas_arg, "lo:hi:n comparison areas");
    c_cx->add_option("--metric-out", metric_out,
                     "also write the constructed metric file here");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n';
        return 2;
    }

    const double saved_abs = default_abs_tol, saved_rel = default_rel_tol;
    default_abs_tol = abs_tol;
    default_rel_tol = rel_tol;
    const bool json = format == "json";

    int status = 0;
    try {
        detail::Sink sink(out, out_path);
        std::ostream& os = *sink.os;

        if (*c_info) {
            const RadialMetric m = parse_metric(metric_arg);
            detail::Row row;
            const char* type = m.kind == MetricKind::Hyperbolic ? "hyperbolic"
                               : m.kind == MetricKind::SchwarzschildAdS
                                   ? "schwarzschild_ads"
                                   : "h_profile";
            row.emplace_back("type", json ? "\"" + std::string(type) + "\""
                                          : std::string(type));
            row.emplace_back("mass", fmt(m.mass));
            row.emplace_back("has_horizon", m.has_horizon() ? "true" : "false");
            if (m.has_horizon()) {
                row.emplace_back("horizon_radius", fmt(m.horizon_radius()));
                row.emplace_back("horizon_area", fmt(m.horizon_area()));
            }
            if (m.kind == MetricKind::HProfile) {
                row.emplace_back("r0", fmt(m.r0));
                row.emplace_back("match_r", fmt(m.match_r));
                row.emplace_back("s1", fmt(m.s1));
            }
            detail::emit_report(os, row, json);
        } else if (*c_quant) {
            const RadialMetric m = parse_metric(metric_arg);
            const double a = detail::parse_real(area_arg);
            if (!(a > 0.0)) throw DomainError("--area must be positive");
            const double s = std::sqrt(a / (4.0 * kPi));
            const SphereGeom g = sphere_geometry(m, s);
            detail::Row row;
            row.emplace_back("area", fmt(g.area));
            row.emplace_back("s", fmt(g.s));
            row.emplace_back("mean_curvature", fmt(g.mean_curvature));
            row.emplace_back("hawking_mass", fmt(g.hawking_mass));
            row.emplace_back("scalar_curvature", fmt(g.scalar_curvature));
            row.emplace_back("ball_volume", fmt(ball_volume(m, s)));
            detail::emit_report(os, row, json);
        } else if (*c_rv) {
            const RadialMetric m = parse_metric(metric_arg);
            detail::Row row;
            row.emplace_back("renorm_vol", fmt(renormalized_volume(m)));
            if (m.has_horizon()) {
                row.emplace_back("horizon_area", fmt(m.horizon_area()));
                row.emplace_back("penrose_margin", fmt(penrose_margin(m)));
            }
            detail::emit_report(os, row, json);
        } else if (*c_imcf) {
            const RadialMetric m = parse_metric(metric_arg);
            const double a0 = detail::parse_real(area_arg);
            if (steps < 1) throw DomainError("--steps must be >= 1");
            const auto samples =
                flow_spheres(m, a0, tmax, static_cast<std::size_t>(steps));
            std::vector<std::vector<std::string>> rows;
            for (const auto& fs : samples)
                rows.push_back({fmt(fs.t), fmt(fs.area), fmt(fs.s),
                                fmt(fs.mean_curvature), fmt(fs.hawking_mass),
                                fmt(fs.swept_volume), fmt(fs.lower_bound)});
            detail::emit_table(os,
                               {"t", "area", "s", "mean_curvature",
                                "hawking_mass", "swept_volume", "lower_bound"},
                               rows, json);
        } else if (*c_prof) {
            const RadialMetric m = parse_metric(metric_arg);
            const auto samples =
                compare_profile(m, detail::parse_range(areas_arg));
            std::vector<std::vector<std::string>> rows;
            for (const auto& p : samples) {
                const char* w =
                    p.winner == Winner::CoordBall ? "coord_ball" : "generalized";
                rows.push_back({fmt(p.area), fmt(p.vol_coord_ball),
                                fmt(p.vol_generalized),
                                json ? "\"" + std::string(w) + "\""
                                     : std::string(w),
                                fmt(p.mean_curvature)});
            }
            detail::emit_table(os,
                               {"area", "vol_coord_ball", "vol_generalized",
                                "winner", "mean_curvature"},
                               rows, json);
        } else if (*c_vexp) {
            ExpansionVariant variant = ExpansionVariant::SchwAdSFull;
            if (variant_arg == "hyperbolic")
                variant = ExpansionVariant::HyperbolicBall;
            else if (variant_arg == "uniform")
                variant = ExpansionVariant::SchwAdSUniform;
            else if (variant_arg == "perturbation")
                variant = ExpansionVariant::CompactPerturbation;
            const auto report = expansion_residual_order(
                mass, detail::parse_range(areas_arg), variant);
            if (json) {
                os << "{\"fitted_order\":" << fmt(report.fitted_order)
                   << ",\"rows\":[";
                for (std::size_t i = 0; i < report.areas.size(); ++i) {
                    if (i) os << ',';
                    os << "{\"area\":" << fmt(report.areas[i])
                       << ",\"exact\":" << fmt(report.exact[i])
                       << ",\"series\":" << fmt(report.series[i])
                       << ",\"residual\":" << fmt(report.residuals[i]) << '}';
                }
                os << "]}\n";
            } else {
                std::vector<std::vector<std::string>> rows;
                for (std::size_t i = 0; i < report.areas.size(); ++i)
                    rows.push_back({fmt(report.areas[i]), fmt(report.exact[i]),
                                    fmt(report.series[i]),
                                    fmt(report.residuals[i])});
                detail::emit_table(os, {"area", "exact", "series", "residual"},
                                   rows, false);
                os << "# fitted_order = " << fmt(report.fitted_order) << '\n';
            }
        } else if (*c_pexp) {
            const RadialMetric m = parse_metric(metric_arg);
            const auto samples =
                profile_expansion_check(m, detail::parse_range(areas_arg));
            std::vector<std::vector<std::string>> rows;
            for (const auto& ms : samples)
                rows.push_back({fmt(ms.volume), fmt(ms.extracted)});
            detail::emit_table(os, {"volume", "extracted"}, rows, json);
        } else if (*c_cx) {
            CounterexampleParams params;
            params.r0 = r0;
            params.eps = eps;
            params.mass = mass;
            params.s1 = s1;
            params.bump_width = bump_width;
            const RadialMetric m = construct(params);
            if (!metric_out.empty()) save_metric(m, metric_out);
            const std::vector<double> areas =
                areas_arg.empty() ? detail::parse_range("1e4:1e8:5")
                                  : detail::parse_range(areas_arg);
            const auto report = verify(m, areas);
            // report is JSON-shaped regardless of --format
            std::ostringstream body;
            body << "{\"min_scalar_curvature\":"
                 << fmt(report.min_scalar_curvature)
                 << ",\"renorm_vol\":" << fmt(report.renorm_vol)
                 << ",\"horizon_area\":" << fmt(report.horizon_area)
                 << ",\"penrose_margin\":" << fmt(report.penrose_margin)
                 << ",\"verdict_R_violated\":"
                 << (report.verdict_R_violated ? "true" : "false")
                 << ",\"verdict_margin_negative\":"
                 << (report.verdict_margin_negative ? "true" : "false")
                 << ",\"verdict_balls_lose\":"
                 << (report.verdict_balls_lose ? "true" : "false")
                 << ",\"profile_samples\":[";
            for (std::size_t i = 0; i < report.profile_samples.size(); ++i) {
                const auto& p = report.profile_samples[i];
                if (i) body << ',';
                body << "{\"area\":" << fmt(p.area)
                     << ",\"vol_coord_ball\":" << fmt(p.vol_coord_ball)
                     << ",\"vol_generalized\":" << fmt(p.vol_generalized)
                     << ",\"winner\":\""
                     << (p.winner == Winner::CoordBall ? "coord_ball"
                                                       : "generalized")
                     << "\",\"mean_curvature\":" << fmt(p.mean_curvature)
                     << '}';
            }
            body << "]}";
            os << body.str() << '\n';
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        status = 1;
    }
    default_abs_tol = saved_abs;
    default_rel_tol = saved_rel;
    return status;
}

}  // namespace ahiso::cli
