#pragma once

#include <stdexcept>
#include <string>

namespace hyperappell {

// Base for every domain error raised by the library. The CLI maps these to
// exit code 3; `UsageError` is the only one mapped to 2.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
public:
    DivisionByZero() : Error("division by zero") {}
};

class ParseError : public Error {
public:
    using Error::Error;
};

class InvalidParameter : public Error {
public:
    using Error::Error;
};

class EvalAtPole : public Error {
public:
    EvalAtPole() : Error("evaluation at x = 0 of a polynomial with negative exponents") {}
};

class ComposeWithLaurent : public Error {
public:
    ComposeWithLaurent()
        : Error("composition requires an ordinary polynomial (no negative exponents)") {}
};

class NonUnitConstantTerm : public Error {
public:
    NonUnitConstantTerm()
        : Error("series reciprocal requires a nonzero constant term free of x") {}
};

class LowerParamPole : public Error {
public:
    using Error::Error;
};

class BadReduction : public Error {
public:
    using Error::Error;
};

class UsageError : public Error {
public:
    using Error::Error;
};

} // namespace hyperappell
