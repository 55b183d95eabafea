#pragma once

#include <string>

#include "rellich/constants.hpp"
#include "rellich/log_remainder.hpp"
#include "rellich/spectrum.hpp"

namespace rellich {

// Value formatting for emitted tables: 15 significant digits, reproducible
// byte-for-byte. Throws on NaN/Inf (outputs never carry them).
std::string format_value(double x);

// Parameter formatting: shortest decimal that round-trips the double.
std::string format_param(double x);

// CSV bodies, LF line endings, header row first.
std::string to_csv(const SweepTable& table);
std::string to_csv(const Spectrum& spectrum);
std::string to_csv(const std::vector<RemainderReport>& reports);

} // namespace rellich
