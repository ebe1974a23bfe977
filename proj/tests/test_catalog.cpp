#include <cmath>
#include <limits>
#include <stdexcept>

#include "doctest.h"
#include "helpers.hpp"
#include "sharpbounds/function_catalog.hpp"

using namespace sharpbounds;

namespace {
constexpr double inf = std::numeric_limits<double>::infinity();

struct Config {
    const char* name;
    std::vector<double> params;
    double lo, hi;       // sample window, avoiding non-smooth points
};

const std::vector<Config> kSmoothConfigs = {
    {"exp", {}, -2.0, 2.0},        {"log", {}, 0.3, 4.0},
    {"sin", {}, -3.0, 3.0},        {"cos", {}, -3.0, 3.0},
    {"softplus", {}, -3.0, 3.0},   {"gelu", {}, -2.0, 2.0},
    {"silu", {}, -3.0, 3.0},       {"pow_c_x", {2.0}, -2.0, 2.0},
    {"pow_x_c", {3.0}, 0.2, 2.0},  {"pow_x_c", {0.5}, 0.2, 2.0},
    {"abs", {}, 0.2, 2.0},         {"relu", {}, 0.2, 2.0},
    {"leaky_relu", {0.01}, -2.0, -0.2}, {"hard_silu", {}, -2.5, 2.5},
};
}  // namespace

TEST_CASE("catalog derivatives agree with finite differences") {
    for (const auto& c : kSmoothConfigs) {
        auto f = catalog_lookup(c.name, c.params);
        CAPTURE(c.name);
        int nmax = std::min(5, f.max_derivative_order);
        for (int n = 1; n <= nmax; ++n) {
            for (int t = 0; t < 100; ++t) {
                double x = sbtest::uniform(c.lo, c.hi);
                double fd = sbtest::central_diff(
                    [&](double y) { return f.nth_derivative(n - 1, y); }, x, 1e-5);
                double want = f.nth_derivative(n, x);
                CHECK(std::abs(fd - want) <= 1e-5 * (1.0 + std::abs(want)));
            }
        }
        for (int t = 0; t < 10; ++t) {
            double x = sbtest::uniform(c.lo, c.hi);
            CHECK(f.nth_derivative(0, x) == f.eval(x));
        }
    }
}

TEST_CASE("catalog_lookup rejects bad input") {
    CHECK_THROWS_AS(catalog_lookup("no_such_fn"), std::invalid_argument);
    CHECK_THROWS_AS(catalog_lookup("pow_c_x", {-2.0}), std::invalid_argument);
    CHECK_THROWS_AS(catalog_lookup("pow_c_x", {}), std::invalid_argument);
}

TEST_CASE("monotonicity certificates") {
    auto e = catalog_lookup("exp");
    for (int k : {1, 2, 3, 5})
        CHECK(e.structure.monotone_kth(k, Interval(-3, 3)) == Monotonicity::Increasing);

    auto lg = catalog_lookup("log");
    CHECK(lg.structure.monotone_kth(1, Interval(0.5, 2)) == Monotonicity::Decreasing);
    CHECK(lg.structure.monotone_kth(2, Interval(0.5, 2)) == Monotonicity::Increasing);
    CHECK(lg.structure.monotone_kth(3, Interval(0.5, 2)) == Monotonicity::Decreasing);
}

TEST_CASE("monotone certificate implies monotone grid") {
    for (const auto& c : kSmoothConfigs) {
        auto f = catalog_lookup(c.name, c.params);
        if (!f.structure.monotone_kth) continue;
        Interval region(c.lo, c.hi);
        for (int k : {1, 2, 3}) {
            if (k + 1 > f.max_derivative_order) continue;
            Monotonicity m = f.structure.monotone_kth(k, region);
            if (m == Monotonicity::Unknown) continue;
            CAPTURE(c.name);
            CAPTURE(k);
            double prev = f.nth_derivative(k, c.lo);
            for (double x : sbtest::grid(c.lo, c.hi, 1000)) {
                double v = f.nth_derivative(k, x);
                if (m == Monotonicity::Increasing)
                    CHECK(v >= prev - 1e-9);
                else
                    CHECK(v <= prev + 1e-9);
                prev = v;
            }
        }
    }
}

TEST_CASE("even-symmetric hessian certificates") {
    CHECK(catalog_lookup("relu").structure.even_symmetric_hessian->alpha == inf);
    CHECK(catalog_lookup("softplus").structure.even_symmetric_hessian->alpha == inf);
    CHECK(catalog_lookup("leaky_relu", {0.1}).structure.even_symmetric_hessian->alpha == inf);
    // stops at the concave kinks: the k=2 closed form is unsound across +-3
    CHECK(catalog_lookup("hard_silu").structure.even_symmetric_hessian->alpha == 3.0);
    CHECK(catalog_lookup("gelu").structure.even_symmetric_hessian->alpha ==
          doctest::Approx(2.0).epsilon(1e-12));
    CHECK(catalog_lookup("silu").structure.even_symmetric_hessian->alpha ==
          doctest::Approx(3.4358409935351107).epsilon(1e-12));
    CHECK_FALSE(catalog_lookup("exp").structure.even_symmetric_hessian.has_value());
}

TEST_CASE("certified hessians are even and nonincreasing on [0, alpha]") {
    for (const char* name : {"softplus", "gelu", "silu"}) {
        auto f = catalog_lookup(name);
        double alpha = std::min(f.structure.even_symmetric_hessian->alpha, 3.0);
        double prev = f.nth_derivative(2, 0.0);
        for (double x : sbtest::grid(0.0, alpha, 500)) {
            double v = f.nth_derivative(2, x);
            CHECK(std::abs(v - f.nth_derivative(2, -x)) < 1e-9);
            CHECK(v <= prev + 1e-9);
            prev = v;
        }
    }
    // hard_silu: constant 1/3 between the kinks, symmetric by inspection
    auto hs = catalog_lookup("hard_silu");
    for (double x : sbtest::grid(0.0, 2.9, 100))
        CHECK(hs.nth_derivative(2, x) == hs.nth_derivative(2, -x));
}

TEST_CASE("local extrema oracles return zeros of the next derivative") {
    struct Probe {
        const char* name;
        int k;
        Interval region;
    };
    for (const auto& p : std::vector<Probe>{{"sin", 1, Interval(-4, 4)},
                                            {"cos", 2, Interval(-4, 4)},
                                            {"gelu", 2, Interval(-3, 3)},
                                            {"softplus", 2, Interval(-4, 4)},
                                            {"softplus", 3, Interval(-4, 4)}}) {
        auto f = catalog_lookup(p.name);
        REQUIRE(f.structure.local_extrema_oracle);
        auto zeros = f.structure.local_extrema_oracle(p.k, p.region);
        CAPTURE(p.name);
        for (size_t i = 0; i < zeros.size(); ++i) {
            CHECK(std::abs(f.nth_derivative(p.k + 1, zeros[i])) < 1e-9);
            if (i) CHECK(zeros[i] > zeros[i - 1]);
        }
        // every sign change of f^(k+1) on a fine grid is bracketed by a zero
        auto xs = sbtest::grid(p.region.lo, p.region.hi, 4000);
        for (size_t i = 1; i < xs.size(); ++i) {
            double a = f.nth_derivative(p.k + 1, xs[i - 1]);
            double b = f.nth_derivative(p.k + 1, xs[i]);
            if (a == 0.0 || b == 0.0 || (a < 0) == (b < 0)) continue;
            bool bracketed = false;
            for (double z : zeros)
                if (z >= xs[i - 1] && z <= xs[i]) bracketed = true;
            CHECK(bracketed);
        }
    }
}

TEST_CASE("combine_linear examples") {
    // 1.5 exp(3x) - 25 x^2
    auto fig1 = combine_linear({{1.5, catalog_lookup("exp"), 3.0, 0.0}}, {0.0, 0.0, -25.0});
    CHECK(fig1.eval(0.5) == doctest::Approx(0.47253360550709723).epsilon(1e-12));
    CHECK(fig1.nth_derivative(2, 0.5) == doctest::Approx(10.502802449563875).epsilon(1e-12));
    CHECK(fig1.structure.monotone_kth(2, Interval(0, 1)) == Monotonicity::Increasing);

    auto idexp = combine_linear({{1.0, catalog_lookup("exp"), 1.0, 0.0}});
    auto e = catalog_lookup("exp");
    for (double x : sbtest::grid(-2, 2, 100)) {
        CHECK(idexp.eval(x) == doctest::Approx(e.eval(x)).epsilon(1e-14));
        CHECK(idexp.nth_derivative(3, x) == doctest::Approx(e.nth_derivative(3, x)).epsilon(1e-14));
    }

    CHECK_THROWS_AS(combine_linear({}, {}), std::invalid_argument);
}

TEST_CASE("derivative_range examples") {
    auto e = catalog_lookup("exp");
    Interval r = derivative_range(e, 2, Interval(0, 2));
    CHECK(r.lo == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(r.hi == doctest::Approx(std::exp(2.0)).epsilon(1e-14));

    auto relu = catalog_lookup("relu");
    Interval rr = derivative_range(relu, 2, Interval(-1, 1));
    CHECK(rr.lo == 0.0);
    CHECK(rr.hi == inf);

    auto s = catalog_lookup("sin");
    Interval sr = derivative_range(s, 0, Interval(0, 3.14159265358979323846));
    CHECK(sr.lo == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(sr.hi == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("derivative_range soundness and sharpness") {
    for (const auto& c : kSmoothConfigs) {
        auto f = catalog_lookup(c.name, c.params);
        Interval region(c.lo, c.hi);
        for (int k : {0, 1, 2, 3}) {
            if (k > f.max_derivative_order) continue;
            bool exact = false;
            Interval r = derivative_range(f, k, region, &exact);
            Interval ri = inflate_ulps(r, 4);
            CAPTURE(c.name);
            CAPTURE(k);
            double seen_lo = inf, seen_hi = -inf;
            for (double x : sbtest::grid(c.lo, c.hi, 1000)) {
                double v = f.nth_derivative(k, x);
                CHECK(contains(ri, v));
                seen_lo = std::min(seen_lo, v);
                seen_hi = std::max(seen_hi, v);
            }
            if (exact && f.structure.local_extrema_oracle) {
                // 1000-point grid misses extrema by up to |f''| h^2 / 8 ~ 5e-6
                CHECK(std::abs(r.lo - seen_lo) < 1e-5 * (1.0 + std::abs(r.lo)));
                CHECK(std::abs(r.hi - seen_hi) < 1e-5 * (1.0 + std::abs(r.hi)));
            }
        }
    }
}
