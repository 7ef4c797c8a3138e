#pragma once

#include <stdexcept>
#include <string>

namespace pidisc {

class error : public std::runtime_error {
public:
    explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

// bad modulus, non-prime p, p = 2
class invalid_field_error : public error {
public:
    using error::error;
};

// dimension / index mismatches
class shape_error : public error {
public:
    using error::error;
};

// an operation whose contract needs char K = 0 or char K large enough
class char_guard_error : public error {
public:
    using error::error;
};

// valid request, but outside what this build implements
class unsupported_error : public error {
public:
    using error::error;
};

// combinatorial size guards (determinant counts, grid sizes)
class budget_error : public error {
public:
    using error::error;
};

// presentation data contradicts itself (non-square rank, non-central trace, ...)
class inconsistency_error : public error {
public:
    using error::error;
};

class parse_error : public error {
public:
    using error::error;
};

// a central point violating the center's relations
class invalid_point_error : public error {
public:
    using error::error;
};

} // namespace pidisc
