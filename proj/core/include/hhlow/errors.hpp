#pragma once

#include <stdexcept>
#include <string>

namespace hhlow {

/// Bad user-facing configuration (CLI exit code 2).
struct config_error : std::runtime_error {
    explicit config_error(const std::string& m) : std::runtime_error(m) {}
};

/// Frequency-geometry violation: Nyquist, annulus, alias rule.
struct geometry_error : config_error {
    explicit geometry_error(const std::string& m) : config_error(m) {}
};

/// Grid or cylinder too coarse for the requested measurement.
struct resolution_error : config_error {
    explicit resolution_error(const std::string& m) : config_error(m) {}
};

/// Mathematical domain violation (w = 0, negative heat time, ...).
struct domain_error : std::runtime_error {
    explicit domain_error(const std::string& m) : std::runtime_error(m) {}
};

/// Bad argument to an operation (grid mismatch, k out of range, ...).
struct parameter_error : std::runtime_error {
    explicit parameter_error(const std::string& m) : std::runtime_error(m) {}
};

/// Exact-arithmetic failure (zero denominator, overflow).
struct arithmetic_error : std::runtime_error {
    explicit arithmetic_error(const std::string& m) : std::runtime_error(m) {}
};

/// Norm requested outside its domain (Ḣ^s with s<0 on a non-mean-free field).
struct norm_domain_error : domain_error {
    explicit norm_domain_error(const std::string& m) : domain_error(m) {}
};

/// A module invariant failed at runtime (CLI exit code 1).
struct invariant_violation : std::runtime_error {
    explicit invariant_violation(const std::string& m) : std::runtime_error(m) {}
};

/// Zero field where a nonzero sample was required.
struct degenerate_sample_error : std::runtime_error {
    explicit degenerate_sample_error(const std::string& m) : std::runtime_error(m) {}
};

/// I/O failure (CLI exit code 3).
struct io_error : std::runtime_error {
    explicit io_error(const std::string& m) : std::runtime_error(m) {}
};

}  // namespace hhlow
