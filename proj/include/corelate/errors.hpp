#pragma once

#include <stdexcept>
#include <string>

namespace corelate {

/// Raised when an operation's precondition does not hold (boundary
/// mismatch, out-of-range table entry, carrier mismatch).
class ContractError : public std::logic_error {
public:
    explicit ContractError(const std::string& what) : std::logic_error(what) {}
};

/// Raised when a requested enumeration or search exceeds the configured bound.
class ResourceError : public std::runtime_error {
public:
    explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

/// Raised by the fixed-point solvers when the supplied map is not monotone.
class MonotonicityError : public std::runtime_error {
public:
    explicit MonotonicityError(const std::string& what) : std::runtime_error(what) {}
};

namespace detail {

inline void require(bool ok, const std::string& what) {
    if (!ok) throw ContractError(what);
}

} // namespace detail

} // namespace corelate
