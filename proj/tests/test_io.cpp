#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "doctest.h"
#include "helpers.hpp"
#include "sharpbounds/fn_parse.hpp"
#include "sharpbounds/json_io.hpp"

using namespace sharpbounds;

namespace {
constexpr double inf = std::numeric_limits<double>::infinity();
}

TEST_CASE("interval JSON round trip") {
    for (Interval iv : {Interval(0.5, 3.6945280494653252), Interval(0, inf), Interval::entire()}) {
        nlohmann::json j = nlohmann::json::parse(dump_json(to_json(iv)));
        CHECK(interval_from_json(j) == iv);
    }
    CHECK(to_json(Interval(0, inf))["hi"] == "inf");
    CHECK(to_json(Interval::entire())["lo"] == "-inf");
}

TEST_CASE("enclosure report JSON round trip reproduces bounds") {
    auto f = catalog_lookup("exp");
    auto rep = enclose(f, 2, 0.5, Interval(0, 2));
    std::string text = dump_json(to_json("exp", 2, rep));
    TaylorEnclosure back = enclosure_from_json(nlohmann::json::parse(text));
    CHECK(back.method == MethodTag::SharpMonotone);
    for (double x : sbtest::grid(0.0, 2.0, 100)) {
        Interval a = eval_enclosure(rep.enclosure, x);
        Interval b = eval_enclosure(back, x);
        CHECK(a.lo == b.lo);
        CHECK(a.hi == b.hi);
    }
}

TEST_CASE("JSON dumping is deterministic with 17 significant digits") {
    auto f = catalog_lookup("exp");
    auto rep = enclose(f, 2, 0.5, Interval(0, 2));
    std::string a = dump_json(to_json("exp", 2, rep));
    std::string b = dump_json(to_json("exp", 2, enclose(f, 2, 0.5, Interval(0, 2))));
    CHECK(a == b);
    CHECK(a.find("0.70255745859974361") != std::string::npos);
    CHECK(format_double(1.0 / 3.0) == "0.33333333333333331");
}

TEST_CASE("CSV writers") {
    auto e = catalog_lookup("exp");
    RatioSeries s = width_ratio_series(e, 2, 0.5, {1e-1, 1e-2});
    std::string csv = ratio_series_csv(s);
    CHECK(csv.rfind("epsilon,baseline_width,sharp_width,ratio,predicted_limit\n", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 3);
    CHECK(csv.find('\r') == std::string::npos);

    auto t = mm_minimize(catalog_lookup("softplus"), 2.0, 1.0, 3, 1e-12);
    std::string mcsv = mm_trace_csv(t);
    CHECK(mcsv.rfind("iter,x,loss,z_upper\n", 0) == 0);
}

TEST_CASE("function spec parsing") {
    CHECK(parse_function("exp").name == "exp");
    CHECK(parse_function("pow:3").eval(2.0) == doctest::Approx(8.0).epsilon(1e-14));
    CHECK(parse_function("exp_base:2").eval(3.0) == doctest::Approx(8.0).epsilon(1e-14));
    CHECK(parse_function("leaky_relu:0.1").eval(-2.0) == doctest::Approx(-0.2).epsilon(1e-14));

    auto fig1 = parse_function("lincomb:[(1.5,exp,3,0)]+poly:[0,0,-25]");
    CHECK(fig1.eval(0.5) == doctest::Approx(0.47253360550709723).epsilon(1e-12));

    auto two = parse_function("lincomb:[(1,exp,1,0),(2,sin,1,0.5)]");
    CHECK(two.eval(0.3) ==
          doctest::Approx(std::exp(0.3) + 2.0 * std::sin(0.8)).epsilon(1e-14));

    CHECK_THROWS_AS(parse_function("frobnicate"), std::invalid_argument);
    CHECK_THROWS_AS(parse_function("pow:abc"), std::invalid_argument);
    CHECK_THROWS_AS(parse_function("lincomb:[(1,exp,1)]"), std::invalid_argument);
    CHECK_THROWS_AS(parse_function("lincomb:poly:[1]"), std::invalid_argument);
}
