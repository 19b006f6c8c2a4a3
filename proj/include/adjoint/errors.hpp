#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace adjoint {

/// Precondition violation by the caller (mismatched caps, non-A⁺ input, ...).
class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Evaluation outside the domain of a closed form (divergent tail, tau not in (0,1)).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Malformed polynomial text. `position()` is a byte offset into the input.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t position)
        : std::runtime_error(what + " at position " + std::to_string(position)),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

} // namespace adjoint
