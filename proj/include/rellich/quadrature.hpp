#pragma once

#include <functional>
#include <vector>

namespace rellich {

// Uniform grid with count nodes covering [lo, hi] inclusive.
struct Grid1D {
    double lo = 0.0;
    double hi = 1.0;
    int count = 0;

    double h() const { return (hi - lo) / (count - 1); }
    double node(int i) const { return lo + i * h(); }
};

// Composite Simpson rule on a uniform grid; the node count must be odd.
double simpson(const std::vector<double>& values, double h);

// Integrates f over [lo, hi] with composite Simpson on `count` nodes
// (rounded up to odd).
double simpson(const std::function<double(double)>& f, double lo, double hi, int count);

// C^2 bump v(s) = (1 - ((s-c)/w)^2)^3 on |s-c| <= w, zero outside.
// Derivatives are closed-form, so the two sides of each verified
// identity share nothing beyond these evaluations.
struct Bump {
    double center = 0.0;
    double width = 1.0;

    double value(double s) const;
    double d1(double s) const;
    double d2(double s) const;
    double support_lo() const { return center - width; }
    double support_hi() const { return center + width; }
};

// The built-in five-bump test family exercised by the transform and
// scaling checks.
std::vector<Bump> builtin_bump_family();

} // namespace rellich
