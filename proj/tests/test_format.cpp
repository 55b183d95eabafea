#include <doctest.h>

#include <limits>

#include "rellich/format.hpp"

using namespace rellich;

TEST_CASE("value formatting uses 15 significant digits") {
    CHECK(format_value(0.5625) == "0.5625");
    CHECK(format_value(9.0 / 25.0) == "0.36");
    CHECK(format_value(1.0 / 3.0) == "0.333333333333333");
    CHECK(format_value(0.0) == "0");
    CHECK_THROWS_AS(format_value(std::numeric_limits<double>::quiet_NaN()),
                    std::invalid_argument);
    CHECK_THROWS_AS(format_value(std::numeric_limits<double>::infinity()),
                    std::invalid_argument);
}

TEST_CASE("parameter formatting round-trips the double") {
    for (double x : {0.05, 2.485, 1.5707963267948966, 1e-12, -3.25}) {
        std::string s = format_param(x);
        CHECK(std::strtod(s.c_str(), nullptr) == x);
    }
}

TEST_CASE("sweep CSV layout is stable") {
    SweepTable t;
    t.parameter = "alpha";
    t.points = {0.0, 0.5, 1.0};
    t.values = {1.0, 0.25, 1.0 / 3.0};
    CHECK(to_csv(t) == "param,value\n0,1\n0.5,0.25\n1,0.333333333333333\n");
}

TEST_CASE("identical tables produce byte-identical CSV") {
    SweepTable t;
    t.parameter = "theta";
    for (int i = 0; i < 200; ++i) {
        t.points.push_back(0.05 + 0.005 * i);
        t.values.push_back(1.0 / (1.0 + i));
    }
    CHECK(to_csv(t) == to_csv(t));
}
