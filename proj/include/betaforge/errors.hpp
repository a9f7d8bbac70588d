#pragma once

#include <stdexcept>
#include <string>

namespace betaforge {

// Malformed input: bad vertex labels, out-of-range parameters, unreadable files.
class ValidationError : public std::invalid_argument {
public:
    explicit ValidationError(const std::string& what) : std::invalid_argument(what) {}
};

// A computation would exceed a configured vertex or evaluation budget.
class ResourceError : public std::runtime_error {
public:
    explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

// A configuration violates a feasibility constraint; the message names it.
class InfeasibleError : public std::runtime_error {
public:
    explicit InfeasibleError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace betaforge
