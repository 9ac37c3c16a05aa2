#pragma once

#include <stdexcept>
#include <string>

namespace hess {

// Bad arguments: wrong rank, repeated eigenvalues, non-dominant weight, ...
struct RejectedInput : std::runtime_error {
    explicit RejectedInput(const std::string& m) : std::runtime_error(m) {}
};

// A theorem-backed consistency assertion failed; signals a convention bug.
struct InternalContradiction : std::runtime_error {
    explicit InternalContradiction(const std::string& m) : std::runtime_error(m) {}
};

// Combinatorial expansion would exceed the configured cap.
struct ResourceLimit : std::runtime_error {
    explicit ResourceLimit(const std::string& m) : std::runtime_error(m) {}
};

// Valid request this build does not handle (e.g. irrational eigenvalues).
struct UnsupportedInput : std::runtime_error {
    explicit UnsupportedInput(const std::string& m) : std::runtime_error(m) {}
};

// A resolver declined to produce an exact answer where one was required.
struct Unresolved : std::runtime_error {
    explicit Unresolved(const std::string& m) : std::runtime_error(m) {}
};

}  // namespace hess
