#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "sharpbounds/enclosure.hpp"
#include "sharpbounds/fn_parse.hpp"
#include "sharpbounds/json_io.hpp"
#include "sharpbounds/mm.hpp"
#include "sharpbounds/oracle.hpp"

namespace sb = sharpbounds;

namespace {

sb::Interval parse_region(const std::string& s) {
    size_t comma = s.find(',');
    if (comma == std::string::npos)
        throw CLI::ValidationError("--region", "expected lo,hi");
    try {
        return sb::Interval(std::stod(s.substr(0, comma)), std::stod(s.substr(comma + 1)));
    } catch (const std::exception& e) {
        throw CLI::ValidationError("--region", e.what());
    }
}

std::vector<double> parse_list(const std::string& s) {
    std::vector<double> out;
    size_t start = 0;
    while (start <= s.size()) {
        size_t comma = s.find(',', start);
        std::string tok = s.substr(start, comma == std::string::npos ? comma : comma - start);
        if (!tok.empty()) out.push_back(std::stod(tok));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

int emit(const std::string& out_path, const std::string& payload) {
    if (out_path.empty()) {
        std::cout << payload;
        return 0;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) {
        std::cerr << "error=io reason=cannot_open_output path=" << out_path << "\n";
        return 1;
    }
    f << payload;
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Taylor polynomial enclosures with sharp interval coefficients"};
    app.require_subcommand(1);

    std::string fspec, region_s, out_path, eps_s;
    int k = 2, n = 0, iters = 100;
    double x0 = 0.0, radius = 1.0, tol = 1e-10;

    auto add_common = [&](CLI::App* sub, bool need_region) {
        sub->add_option("--f", fspec, "function spec")->required();
        sub->add_option("--out", out_path, "output path (default stdout)");
        if (need_region) sub->add_option("--region", region_s, "trust region lo,hi")->required();
    };

    auto* c_enclose = app.add_subcommand("enclose", "enclosure report (JSON)");
    add_common(c_enclose, true);
    c_enclose->add_option("--k", k)->required();
    c_enclose->add_option("--x0", x0)->required();

    auto* c_compare = app.add_subcommand("compare", "sharp vs baseline (JSON)");
    add_common(c_compare, true);
    c_compare->add_option("--k", k)->required();
    c_compare->add_option("--x0", x0)->required();

    auto* c_verify = app.add_subcommand("verify", "grid validity audit (JSON)");
    add_common(c_verify, true);
    c_verify->add_option("--k", k)->required();
    c_verify->add_option("--x0", x0)->required();
    c_verify->add_option("--n", n, "grid points (default 100000)");

    auto* c_ratio = app.add_subcommand("ratio", "width-ratio series (CSV)");
    add_common(c_ratio, false);
    c_ratio->add_option("--k", k)->required();
    c_ratio->add_option("--x0", x0)->required();
    c_ratio->add_option("--epsilons", eps_s, "comma list of region half-widths");

    auto* c_mm = app.add_subcommand("mm", "majorize-minimize trace (CSV)");
    add_common(c_mm, false);
    c_mm->add_option("--x0", x0, "initial iterate")->required();
    c_mm->add_option("--radius", radius)->required();
    c_mm->add_option("--iters", iters);
    c_mm->add_option("--tol", tol);

    auto* c_plot = app.add_subcommand("plotdata", "x,f,lower,upper grid (CSV)");
    add_common(c_plot, true);
    c_plot->add_option("--k", k)->required();
    c_plot->add_option("--x0", x0)->required();
    c_plot->add_option("--n", n, "rows (default 200)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e, std::cout, std::cerr);
        std::cerr << "error=usage reason=" << e.get_name() << "\n";
        return 2;
    }

    try {
        sb::FunctionDescriptor f = sb::parse_function(fspec);
        if (c_enclose->parsed() || c_compare->parsed()) {
            sb::Interval region = parse_region(region_s);
            sb::EnclosureReport rep = sb::enclose(f, k, x0, region);
            if (c_enclose->parsed())
                return emit(out_path, sb::dump_json(sb::to_json(fspec, k, rep)) + "\n");
            nlohmann::json j;
            j["function"] = fspec;
            j["k"] = k;
            j["x0"] = x0;
            j["region"] = sb::to_json(region);
            j["method"] = sb::to_string(rep.enclosure.method);
            j["sharp"] = sb::to_json(rep.enclosure.interval_coeff);
            j["baseline"] = sb::to_json(rep.baseline_interval);
            j["width_ratio"] =
                std::isinf(rep.width_ratio) ? nlohmann::json("inf") : nlohmann::json(rep.width_ratio);
            return emit(out_path, sb::dump_json(j) + "\n");
        }
        if (c_verify->parsed()) {
            sb::Interval region = parse_region(region_s);
            sb::EnclosureReport rep = sb::enclose(f, k, x0, region);
            sb::ValidityReport vr = sb::verify_enclosure(f, rep.enclosure, n > 0 ? n : 100000);
            return emit(out_path, sb::dump_json(sb::to_json(vr)) + "\n");
        }
        if (c_ratio->parsed()) {
            sb::RatioSeries s = sb::width_ratio_series(f, k, x0, parse_list(eps_s));
            return emit(out_path, sb::ratio_series_csv(s));
        }
        if (c_mm->parsed()) {
            sb::MMTrace t = sb::mm_minimize(f, x0, radius, iters, tol);
            return emit(out_path, sb::mm_trace_csv(t));
        }
        if (c_plot->parsed()) {
            sb::Interval region = parse_region(region_s);
            sb::EnclosureReport rep = sb::enclose(f, k, x0, region);
            int rows = n > 0 ? n : 200;
            std::string csv = "x,f,lower,upper\n";
            double h = sb::width(region) / double(rows - 1);
            for (int i = 0; i < rows; ++i) {
                double x = (i == rows - 1) ? region.hi : region.lo + double(i) * h;
                sb::Interval b = sb::eval_enclosure(rep.enclosure, x);
                csv += sb::format_double(x) + "," + sb::format_double(f.eval(x)) + "," +
                       sb::format_double(b.lo) + "," + sb::format_double(b.hi) + "\n";
            }
            return emit(out_path, csv);
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error=usage reason=" << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error=domain reason=" << e.what() << "\n";
        return 1;
    } catch (const std::domain_error& e) {
        std::cerr << "error=domain reason=" << e.what() << "\n";
        return 1;
    }
    return 2;
}
