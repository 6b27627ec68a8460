#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace zlocus {

/// Base class for every error raised on bad caller input.
class input_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ring_mismatch : public input_error {
public:
    ring_mismatch() : input_error("operands live in different polynomial rings") {}
    explicit ring_mismatch(const std::string& what) : input_error(what) {}
};

class dimension_mismatch : public input_error {
public:
    using input_error::input_error;
};

class degree_overflow : public input_error {
public:
    using input_error::input_error;
};

/// Polynomial text that does not match the grammar. `offset` is a byte offset
/// into the parsed string.
class parse_error : public input_error {
public:
    parse_error(const std::string& msg, std::size_t offset)
        : input_error(msg + " at byte " + std::to_string(offset)), offset_(offset) {}

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

/// An internal invariant failed; never caused by user input.
class invariant_violation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace zlocus
