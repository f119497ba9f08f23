#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pm {

/// Invalid argument or failed construction invariant.
class ArgumentError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// p-adic valuation of zero.
class ValuationError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A bounded computation (sieve, table, enumeration) would exceed its cap.
class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Thrown from inside a search when the caller-supplied node budget runs out.
class BudgetExhausted : public ResourceError {
public:
    BudgetExhausted() : ResourceError("search budget exhausted") {}
};

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, std::size_t position)
        : std::runtime_error(message + " at position " + std::to_string(position)),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

}  // namespace pm
