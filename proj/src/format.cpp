#include "rellich/format.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace rellich {

std::string format_value(double x) {
    if (!std::isfinite(x)) throw std::invalid_argument("format_value: non-finite value");
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.15g", x);
    return buf;
}

std::string format_param(double x) {
    if (!std::isfinite(x)) throw std::invalid_argument("format_param: non-finite value");
    char buf[40];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x);
    if (ec != std::errc{}) throw std::invalid_argument("format_param: conversion failed");
    return std::string(buf, end);
}

std::string to_csv(const SweepTable& table) {
    std::string out = "param,value\n";
    for (std::size_t i = 0; i < table.points.size(); ++i) {
        out += format_param(table.points[i]);
        out += ',';
        out += format_value(table.values[i]);
        out += '\n';
    }
    return out;
}

std::string to_csv(const Spectrum& spectrum) {
    std::string out = "value,ell,j,multiplicity\n";
    for (const SpectrumEntry& e : spectrum.entries) {
        out += format_value(e.value);
        out += ',';
        out += std::to_string(e.ell);
        out += ',';
        out += std::to_string(e.j);
        out += ',';
        out += std::to_string(e.multiplicity);
        out += '\n';
    }
    return out;
}

std::string to_csv(const std::vector<RemainderReport>& reports) {
    std::string out = "lhs_energy,mu_term,log2_term,log4_term,slack\n";
    for (const RemainderReport& r : reports) {
        out += format_value(r.lhs_energy);
        out += ',';
        out += format_value(r.mu_term);
        out += ',';
        out += format_value(r.log2_term);
        out += ',';
        out += format_value(r.log4_term);
        out += ',';
        out += format_value(r.slack);
        out += '\n';
    }
    return out;
}

} // namespace rellich
