#pragma once

#include <stdexcept>
#include <string>

namespace bhlab {

// All library errors derive from error so callers can catch one type.
struct error : std::runtime_error {
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

// Invalid numeric parameters (exponents out of range, non-positive t, ...).
struct bad_params : error {
    explicit bad_params(const std::string& what) : error(what) {}
};

// Enumeration or tensor size would exceed the configured cap.
struct instance_too_large : error {
    explicit instance_too_large(const std::string& what) : error(what) {}
};

// Coordinate subset with duplicates or entries outside 1..m.
struct malformed_subset : error {
    explicit malformed_subset(const std::string& what) : error(what) {}
};

struct empty_input : error {
    explicit empty_input(const std::string& what) : error(what) {}
};

// Tensor flagged symmetric does not have class-constant entries.
struct symmetry_violation : error {
    explicit symmetry_violation(const std::string& what) : error(what) {}
};

// Weight undefined or non-positive at a requested position.
struct weight_domain_error : error {
    explicit weight_domain_error(const std::string& what) : error(what) {}
};

// Argument outside a function's mathematical domain (log of 1, ...).
struct domain_error : error {
    explicit domain_error(const std::string& what) : error(what) {}
};

// Malformed input files / JSON.
struct parse_error : error {
    explicit parse_error(const std::string& what) : error(what) {}
};

}  // namespace bhlab
