#include "rellich/quadrature.hpp"

#include <cmath>
#include <stdexcept>

namespace rellich {

double simpson(const std::vector<double>& values, double h) {
    std::size_t n = values.size();
    if (n < 3 || n % 2 == 0)
        throw std::invalid_argument("simpson: odd node count >= 3 required");
    double odd = 0.0, even = 0.0;
    for (std::size_t i = 1; i + 1 < n; i += 2) odd += values[i];
    for (std::size_t i = 2; i + 1 < n; i += 2) even += values[i];
    return h / 3.0 * (values.front() + values.back() + 4.0 * odd + 2.0 * even);
}

double simpson(const std::function<double(double)>& f, double lo, double hi, int count) {
    if (count < 3) count = 3;
    if (count % 2 == 0) ++count;
    double h = (hi - lo) / (count - 1);
    std::vector<double> values(count);
    for (int i = 0; i < count; ++i) values[i] = f(lo + i * h);
    return simpson(values, h);
}

double Bump::value(double s) const {
    double xi = (s - center) / width;
    double t = 1.0 - xi * xi;
    return t > 0.0 ? t * t * t : 0.0;
}

double Bump::d1(double s) const {
    double xi = (s - center) / width;
    double t = 1.0 - xi * xi;
    return t > 0.0 ? -6.0 * xi * t * t / width : 0.0;
}

double Bump::d2(double s) const {
    double xi = (s - center) / width;
    double t = 1.0 - xi * xi;
    return t > 0.0 ? 6.0 * t * (5.0 * xi * xi - 1.0) / (width * width) : 0.0;
}

std::vector<Bump> builtin_bump_family() {
    return {{0.0, 2.0}, {3.0, 1.0}, {-2.0, 1.5}, {1.0, 3.0}, {-5.0, 2.5}};
}

} // namespace rellich
