#pragma once

#include <stdexcept>
#include <string>

namespace knotwidth {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed text or JSON. line/column are 1-based, 0 when unknown.
class ParseError : public Error {
public:
    ParseError(const std::string& msg, int line = 0, int column = 0);
    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

// Well-formed input the requested operation does not handle
// (true vertices in PD output, tree diagrams, split diagrams, non-coprime p,q).
class UnsupportedInput : public Error {
public:
    using Error::Error;
};

// Input violating an operation's precondition.
class InvalidInput : public Error {
public:
    using Error::Error;
};

// A checked internal claim did not hold.
class InternalError : public Error {
public:
    using Error::Error;
};

}  // namespace knotwidth
