#include "sharpbounds/json_io.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

namespace sharpbounds {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

nlohmann::json endpoint_to_json(double v) {
    if (v == kInf) return "inf";
    if (v == -kInf) return "-inf";
    return v;
}

double endpoint_from_json(const nlohmann::json& j) {
    if (j.is_string()) {
        std::string s = j.get<std::string>();
        if (s == "inf") return kInf;
        if (s == "-inf") return -kInf;
        throw std::invalid_argument("interval endpoint: bad string '" + s + "'");
    }
    return j.get<double>();
}

void dump_rec(const nlohmann::json& j, std::string& out) {
    switch (j.type()) {
        case nlohmann::json::value_t::object: {
            out += '{';
            bool first = true;
            for (auto it = j.begin(); it != j.end(); ++it) {
                if (!first) out += ',';
                first = false;
                out += nlohmann::json(it.key()).dump();
                out += ':';
                dump_rec(it.value(), out);
            }
            out += '}';
            break;
        }
        case nlohmann::json::value_t::array: {
            out += '[';
            bool first = true;
            for (const auto& v : j) {
                if (!first) out += ',';
                first = false;
                dump_rec(v, out);
            }
            out += ']';
            break;
        }
        case nlohmann::json::value_t::number_float:
            out += format_double(j.get<double>());
            break;
        default:
            out += j.dump();
    }
}

}  // namespace

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string dump_json(const nlohmann::json& j) {
    std::string out;
    dump_rec(j, out);
    return out;
}

nlohmann::json to_json(const Interval& iv) {
    return {{"lo", endpoint_to_json(iv.lo)}, {"hi", endpoint_to_json(iv.hi)}};
}

Interval interval_from_json(const nlohmann::json& j) {
    return Interval(endpoint_from_json(j.at("lo")), endpoint_from_json(j.at("hi")));
}

nlohmann::json to_json(const std::string& function_spec, int k, const EnclosureReport& rep) {
    nlohmann::json j;
    j["function"] = function_spec;
    j["k"] = k;
    j["x0"] = rep.enclosure.x0;
    j["region"] = to_json(rep.enclosure.trust_region);
    j["method"] = to_string(rep.enclosure.method);
    j["interval"] = to_json(rep.enclosure.interval_coeff);
    j["baseline"] = to_json(rep.baseline_interval);
    j["width_ratio"] = endpoint_to_json(rep.width_ratio);
    j["taylor_coeffs"] = rep.enclosure.lower_coeffs.coeffs;
    j["diagnostics"] = rep.diagnostics;
    return j;
}

TaylorEnclosure enclosure_from_json(const nlohmann::json& j) {
    TaylorEnclosure e{j.at("x0").get<double>(),
                      j.at("k").get<int>(),
                      {},
                      interval_from_json(j.at("interval")),
                      interval_from_json(j.at("region")),
                      MethodTag::LagrangeBaseline};
    e.lower_coeffs.x0 = e.x0;
    e.lower_coeffs.coeffs = j.at("taylor_coeffs").get<std::vector<double>>();
    std::string m = j.at("method").get<std::string>();
    for (MethodTag t : {MethodTag::SharpMonotone, MethodTag::SharpEvenSymmetric,
                        MethodTag::LocalExtrema, MethodTag::IntervalDerivative})
        if (to_string(t) == m) e.method = t;
    return e;
}

nlohmann::json to_json(const ValidityReport& rep) {
    nlohmann::json vio = nlohmann::json::array();
    for (const auto& v : rep.violations)
        vio.push_back({{"x", v.x}, {"fx", v.fx}, {"bound", to_json(v.bound)}});
    return {{"points_checked", rep.points_checked},
            {"violations", vio},
            {"max_violation_magnitude", rep.max_violation_magnitude}};
}

nlohmann::json to_json(const RatioSeries& s) {
    return {{"epsilons", s.epsilons},
            {"ratios", s.ratios},
            {"baseline_widths", s.baseline_widths},
            {"sharp_widths", s.sharp_widths},
            {"predicted_limit", s.predicted_limit},
            {"ell", s.ell},
            {"slope_baseline", s.slope_baseline},
            {"slope_sharp", s.slope_sharp}};
}

std::string ratio_series_csv(const RatioSeries& s) {
    std::string out = "epsilon,baseline_width,sharp_width,ratio,predicted_limit\n";
    for (size_t i = 0; i < s.epsilons.size(); ++i) {
        out += format_double(s.epsilons[i]) + "," + format_double(s.baseline_widths[i]) + "," +
               format_double(s.sharp_widths[i]) + "," + format_double(s.ratios[i]) + "," +
               format_double(s.predicted_limit) + "\n";
    }
    return out;
}

std::string mm_trace_csv(const MMTrace& t) {
    std::string out = "iter,x,loss,z_upper\n";
    for (const auto& r : t.records)
        out += std::to_string(r.iter) + "," + format_double(r.x) + "," + format_double(r.loss) +
               "," + format_double(r.z_upper) + "\n";
    return out;
}

}  // namespace sharpbounds
