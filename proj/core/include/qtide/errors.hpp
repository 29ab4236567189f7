#pragma once

#include <stdexcept>
#include <string>

namespace qtide {

/// Input outside an operation's stated domain (bad quantum number,
/// excursion beyond the small-offset regime, inverted ordering, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Arithmetic attempted between quantities of incompatible dimension.
class DimensionError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Config document is syntactically broken or contains an unknown key.
/// The message names the offending key where one can be identified.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A parsed value violates a physical-validity constraint.
class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Phase loop sampled too sparsely to unwrap unambiguously.
class UndersampledError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Two point charges coincide, or a field was requested on a source.
class SingularityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Signal record is shorter than the detection window requires.
class InsufficientDataError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace qtide
