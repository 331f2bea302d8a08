#ifndef FREEHILB_ERRORS_HPP
#define FREEHILB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace freehilb {

/// Malformed input text: spec files, regular expressions, alphabets.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Structurally well-formed input that violates a semantic requirement,
/// e.g. a language declared ideal-closed that is not.
class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An enumeration exceeded its state budget. For orbit enumeration this
/// signals a non-regular ideal or a budget chosen too small.
class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace freehilb

#endif
