#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace usctec {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// One or more model invariants are violated. `diagnostics()` lists every one.
class ValidationError : public Error {
public:
    explicit ValidationError(std::vector<std::string> diagnostics);
    const std::vector<std::string>& diagnostics() const noexcept { return diagnostics_; }

private:
    std::vector<std::string> diagnostics_;
};

/// A load, division or placement problem has no solution.
class InfeasibleError : public Error {
public:
    using Error::Error;
};

/// Fewer than L results are available for some decoding group.
class NotDecodableError : public Error {
public:
    NotDecodableError(std::size_t block, std::size_t group, std::size_t available, std::size_t needed);
    std::size_t block() const noexcept { return block_; }
    std::size_t group() const noexcept { return group_; }

private:
    std::size_t block_;
    std::size_t group_;
};

/// Malformed input: bad rational literal, mismatched dimensions, etc.
class InputError : public Error {
public:
    using Error::Error;
};

}  // namespace usctec
