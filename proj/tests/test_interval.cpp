#include <cmath>
#include <limits>
#include <stdexcept>

#include "doctest.h"
#include "helpers.hpp"
#include "sharpbounds/interval.hpp"

using namespace sharpbounds;

namespace {
constexpr double inf = std::numeric_limits<double>::infinity();
constexpr double nan_ = std::numeric_limits<double>::quiet_NaN();
}  // namespace

TEST_CASE("interval construction") {
    CHECK_THROWS_AS(Interval(2.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(Interval(nan_, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(Interval(0.0, nan_), std::invalid_argument);
    CHECK(Interval(-inf, inf) == Interval::entire());
    CHECK(Interval::point(3.0) == Interval(3.0, 3.0));
}

TEST_CASE("scale basics") {
    CHECK(scale(Interval(1, 2), 3.0) == Interval(3, 6));
    CHECK(scale(Interval(1, 2), -3.0) == Interval(-6, -3));
    CHECK(scale(Interval(-1, 1), 0.0) == Interval(0, 0));
    // 0 * inf := 0 so evaluation at x = x0 collapses to a point
    CHECK(scale(Interval(0, inf), 0.0) == Interval(0, 0));
    CHECK(scale(Interval(-inf, inf), 0.0) == Interval(0, 0));
    CHECK(scale(Interval(0, inf), 2.0) == Interval(0, inf));
    CHECK(scale(Interval(0, inf), -1.0) == Interval(-inf, 0));
    CHECK_THROWS_AS(scale(Interval(0, 1), nan_), std::invalid_argument);
}

TEST_CASE("width / contains / is_subset basics") {
    CHECK(width(Interval(0.70255, 1.4522)) == doctest::Approx(0.74965).epsilon(1e-12));
    CHECK(width(Interval(5, 5)) == 0.0);
    CHECK(width(Interval(0, inf)) == inf);

    CHECK(contains(Interval(0, 1), 0.5));
    CHECK(contains(Interval(0, 1), 1.0));
    CHECK_FALSE(contains(Interval(0, 1), 1.0000001));
    CHECK_FALSE(contains(Interval(0, 1), nan_));

    CHECK(is_subset(Interval(0.70255, 1.4522), Interval(0.5, 3.6945)));
    CHECK(is_subset(Interval(0, 2), Interval(0, 2)));
    CHECK_FALSE(is_subset(Interval(0, 2), Interval(0, 1)));
    CHECK(is_subset(Interval(0, 1), Interval::entire()));
}

TEST_CASE("hull and inflate_ulps") {
    CHECK(hull(Interval(0, 1), Interval(2, 3)) == Interval(0, 3));
    Interval w = inflate_ulps(Interval(1.0, 2.0), 4);
    CHECK(w.lo < 1.0);
    CHECK(w.hi > 2.0);
    CHECK(w.lo == doctest::Approx(1.0));
    CHECK(w.hi == doctest::Approx(2.0));
    // infinite endpoints stay put
    Interval v = inflate_ulps(Interval(0, inf), 4);
    CHECK(v.hi == inf);
}

TEST_CASE("scale associativity within 1 ulp") {
    for (int t = 0; t < 500; ++t) {
        double lo = sbtest::uniform(-10, 10);
        double hi = lo + sbtest::uniform(0, 10);
        double a = sbtest::uniform(-5, 5);
        double b = sbtest::uniform(-5, 5);
        Interval left = scale(scale(Interval(lo, hi), a), b);
        Interval right = scale(Interval(lo, hi), a * b);
        // one ulp measured at the magnitude of the products involved
        double mag = std::max(std::abs(lo), std::abs(hi)) * std::abs(a) *
                     std::max(1.0, std::abs(b));
        double ulp = std::nextafter(mag, inf) - mag;
        CHECK(std::abs(left.lo - right.lo) <= 2 * ulp);
        CHECK(std::abs(left.hi - right.hi) <= 2 * ulp);
    }
}

TEST_CASE("scaled membership after 4-ulp inflation") {
    for (int t = 0; t < 500; ++t) {
        double lo = sbtest::uniform(-10, 10);
        double hi = lo + sbtest::uniform(0, 10);
        double a = sbtest::uniform(-5, 5);
        double z = sbtest::uniform(lo, hi);
        CHECK(contains(inflate_ulps(scale(Interval(lo, hi), a), 4), a * z));
    }
}

TEST_CASE("width scaling within 1 ulp") {
    for (int t = 0; t < 500; ++t) {
        double lo = sbtest::uniform(-10, 10);
        double hi = lo + sbtest::uniform(0, 10);
        double a = sbtest::uniform(-5, 5);
        double got = width(scale(Interval(lo, hi), a));
        double want = std::abs(a) * width(Interval(lo, hi));
        double mag = std::max(std::abs(lo), std::abs(hi)) * std::abs(a);
        double ulp = std::nextafter(mag, inf) - mag;
        CHECK(std::abs(got - want) <= 2 * ulp);
    }
}
