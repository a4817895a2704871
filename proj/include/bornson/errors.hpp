#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace bornson {

// Base of every error raised by the library. The C API maps each subclass to
// a distinct status code.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DimensionError : public Error {
public:
    using Error::Error;
};

class ArgumentError : public Error {
public:
    using Error::Error;
};

// E sits on (or too close to) an eigenvalue of the free Hamiltonian.
class ResonanceError : public Error {
public:
    ResonanceError(std::size_t level, const std::string& what)
        : Error(what), level_(level) {}

    // 0-based index of the offending diagonal level.
    std::size_t level() const noexcept { return level_; }

private:
    std::size_t level_;
};

// The transition graph has a directed cycle, so the Born series does not
// terminate. Carries the witness cycle (0-based vertices).
class NotNilpotentError : public Error {
public:
    NotNilpotentError(std::vector<std::size_t> cycle, const std::string& what)
        : Error(what), cycle_(std::move(cycle)) {}

    const std::vector<std::size_t>& cycle() const noexcept { return cycle_; }

private:
    std::vector<std::size_t> cycle_;
};

class SingularError : public Error {
public:
    using Error::Error;
};

class TopologyError : public Error {
public:
    using Error::Error;
};

class UnboundedEnumerationError : public Error {
public:
    using Error::Error;
};

class EnumerationLimitError : public Error {
public:
    using Error::Error;
};

// Malformed system-spec or vector file; the message names the record.
class ParseError : public Error {
public:
    using Error::Error;
};

} // namespace bornson
