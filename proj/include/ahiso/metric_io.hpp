#pragma once

// Metric file ingestion and emission.  Format (JSON):
//   {"type": "hyperbolic"}
//   {"type": "schwarzschild_ads", "mass": m}
//   {"type": "h_profile", "r0": ..., "phi0": ..., "match_r": ...,
//    "tail_mass": ..., "h_samples": [[r, H, dH], ...]}
// Profiled metrics are reconstructed by cubic Hermite interpolation of the
// sampled (H, dH) pairs, so the stored slopes are honored exactly at the
// nodes.

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "ahiso/errors.hpp"
#include "ahiso/metric.hpp"

namespace ahiso {

namespace detail {

struct HermiteTable {
    std::vector<double> r, h, dh;
};

// Cubic Hermite value and derivative on the sampled grid.
inline std::pair<double, double> hermite_eval(const HermiteTable& tab,
                                              double r) {
    const auto& xs = tab.r;
    if (r <= xs.front()) return {tab.h.front(), tab.dh.front()};
    if (r >= xs.back()) return {tab.h.back(), tab.dh.back()};
    const auto it = std::upper_bound(xs.begin(), xs.end(), r);
    const std::size_t i = static_cast<std::size_t>(it - xs.begin()) - 1;
    const double w = xs[i + 1] - xs[i];
    const double u = (r - xs[i]) / w;
    const double u2 = u * u, u3 = u2 * u;
    const double h00 = 2.0 * u3 - 3.0 * u2 + 1.0;
    const double h10 = u3 - 2.0 * u2 + u;
    const double h01 = -2.0 * u3 + 3.0 * u2;
    const double h11 = u3 - u2;
    const double value = h00 * tab.h[i] + h10 * w * tab.dh[i] +
                         h01 * tab.h[i + 1] + h11 * w * tab.dh[i + 1];
    const double d00 = (6.0 * u2 - 6.0 * u) / w;
    const double d10 = 3.0 * u2 - 4.0 * u + 1.0;
    const double d01 = (-6.0 * u2 + 6.0 * u) / w;
    const double d11 = 3.0 * u2 - 2.0 * u;
    const double deriv = d00 * tab.h[i] + d10 * tab.dh[i] +
                         d01 * tab.h[i + 1] + d11 * tab.dh[i + 1];
    return {value, deriv};
}

inline double json_number(const nlohmann::json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_number())
        throw DomainError(std::string("metric file: missing numeric field '") +
                          key + "'");
    return j[key].get<double>();
}

}  // namespace detail

inline RadialMetric metric_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("type") || !j["type"].is_string())
        throw DomainError("metric file: missing 'type'");
    const std::string type = j["type"].get<std::string>();
    if (type == "hyperbolic") return make_hyperbolic();
    if (type == "schwarzschild_ads")
        return make_schwarzschild_ads(detail::json_number(j, "mass"));
    if (type == "h_profile") {
        const double r0 = detail::json_number(j, "r0");
        const double phi0 = detail::json_number(j, "phi0");
        const double match_r = detail::json_number(j, "match_r");
        const double tail_mass = detail::json_number(j, "tail_mass");
        if (!j.contains("h_samples") || !j["h_samples"].is_array() ||
            j["h_samples"].size() < 2)
            throw DomainError("metric file: h_samples must list >= 2 triples");
        auto tab = std::make_shared<detail::HermiteTable>();
        for (const auto& row : j["h_samples"]) {
            if (!row.is_array() || row.size() != 3)
                throw DomainError("metric file: h_samples entries are [r, H, dH]");
            tab->r.push_back(row[0].get<double>());
            tab->h.push_back(row[1].get<double>());
            tab->dh.push_back(row[2].get<double>());
        }
        if (!std::is_sorted(tab->r.begin(), tab->r.end()))
            throw DomainError("metric file: h_samples must be sorted in r");
        HProfileFn fn = [tab](double r) { return detail::hermite_eval(*tab, r); };
        return make_h_profile(r0, phi0, fn, match_r, tail_mass);
    }
    throw DomainError("metric file: unknown type '" + type + "'");
}

/// Parses an inline JSON metric description, or `@path` to read it from a
/// file.
inline RadialMetric parse_metric(const std::string& source) {
    std::string text = source;
    if (!source.empty() && source.front() == '@') {
        std::ifstream in(source.substr(1));
        if (!in) throw DomainError("metric file: cannot open " + source.substr(1));
        std::ostringstream buf;
        buf << in.rdbuf();
        text = buf.str();
    }
    nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
    if (j.is_discarded()) throw DomainError("metric file: malformed JSON");
    return metric_from_json(j);
}

namespace detail {

inline std::string fmt_g(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

}  // namespace detail

/// Serializes a metric in the file format above; profiled metrics are
/// sampled on a 4001-point uniform grid.
inline std::string metric_to_json_text(const RadialMetric& m) {
    using detail::fmt_g;
    switch (m.kind) {
    case MetricKind::Hyperbolic:
        return "{\"type\":\"hyperbolic\"}";
    case MetricKind::SchwarzschildAdS:
        return "{\"type\":\"schwarzschild_ads\",\"mass\":" + fmt_g(m.mass) + "}";
    case MetricKind::HProfile: {
        std::string out = "{\"type\":\"h_profile\",\"r0\":" + fmt_g(m.r0) +
                          ",\"phi0\":" + fmt_g(m.phi0) +
                          ",\"match_r\":" + fmt_g(m.match_r) +
                          ",\"tail_mass\":" + fmt_g(m.mass) +
                          ",\"h_samples\":[";
        const int n = 4000;
        for (int i = 0; i <= n; ++i) {
            const double r = m.r0 + (m.match_r - m.r0) * i / n;
            auto [h, dh] = m.h_fn(r);
            if (i) out += ',';
            out += "[" + fmt_g(r) + "," + fmt_g(h) + "," + fmt_g(dh) + "]";
        }
        out += "]}";
        return out;
    }
    }
    throw DomainError("metric_to_json_text: unknown metric kind");
}

inline void save_metric(const RadialMetric& m, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw DomainError("save_metric: cannot write " + path);
    out << metric_to_json_text(m) << '\n';
}

}  // namespace ahiso
