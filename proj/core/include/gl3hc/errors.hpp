#pragma once

#include <stdexcept>
#include <string>

namespace gl3hc {

/// A denominator vanished in the plain rational ring (u == v in f, g, K, ...).
class PoleError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A truncated series operation needed an order that is not retained, or a
/// divisor vanished to the retained precision.
class TruncationError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A limit expression still carried negative powers of the infinitesimal.
class SingularLimitError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class ParseError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Set sizes do not match what the formula requires.
class CardinalityError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class SamplerExhausted : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace gl3hc
