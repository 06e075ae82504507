#pragma once

#include <stdexcept>
#include <string>

namespace heckelab {

// Exit codes used by the CLI; library code throws, the CLI maps.
enum class ExitCode : int {
    ok = 0,
    assertion_failure = 1,
    invalid_input = 2,
    insufficient_precision = 3,
};

struct error : std::runtime_error {
    explicit error(const std::string& msg) : std::runtime_error(msg) {}
    virtual ExitCode exit_code() const { return ExitCode::assertion_failure; }
};

struct invalid_input_error : error {
    using error::error;
    ExitCode exit_code() const override { return ExitCode::invalid_input; }
};

struct invalid_weight_error : invalid_input_error {
    using invalid_input_error::invalid_input_error;
};

struct unsupported_range_error : invalid_input_error {
    using invalid_input_error::invalid_input_error;
};

struct insufficient_precision_error : error {
    using error::error;
    ExitCode exit_code() const override { return ExitCode::insufficient_precision; }
};

struct pole_error : invalid_input_error {
    using invalid_input_error::invalid_input_error;
};

// Two independent evaluation routes disagreed beyond tolerance.
struct cross_validation_error : insufficient_precision_error {
    using insufficient_precision_error::insufficient_precision_error;
};

// |lambda(p)| > 2 beyond tolerance; signals an upstream bug.
struct deligne_violation_error : error {
    using error::error;
};

struct degenerate_spectrum_error : error {
    using error::error;
};

struct degenerate_basis_error : error {
    using error::error;
};

} // namespace heckelab
