#pragma once

#include <stdexcept>
#include <string>

namespace rellich {

// Numerical failures (as opposed to bad arguments, which use
// std::invalid_argument). The CLI maps these to exit code 3.
class numerical_error : public std::runtime_error {
public:
    explicit numerical_error(const std::string& what) : std::runtime_error(what) {}
};

// Spectrum truncated below the range needed by a spectral-distance query.
class insufficient_spectrum_error : public numerical_error {
public:
    explicit insufficient_spectrum_error(const std::string& what) : numerical_error(what) {}
};

// Root bracketing failed (target outside the achievable window).
class no_root_error : public numerical_error {
public:
    explicit no_root_error(const std::string& what) : numerical_error(what) {}
};

// A required spectral hypothesis does not hold for the given inputs.
class hypothesis_error : public numerical_error {
public:
    explicit hypothesis_error(const std::string& what) : numerical_error(what) {}
};

// Input is degenerate for the requested computation (e.g. w_s == 0).
class degenerate_input_error : public numerical_error {
public:
    explicit degenerate_input_error(const std::string& what) : numerical_error(what) {}
};

} // namespace rellich
