#pragma once

#include <stdexcept>
#include <string>

namespace invgraph {

// Base for all domain errors raised by the library. Usage errors
// (bad dimensions, bad arguments) use std::invalid_argument directly.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

class DimensionMismatch : public Error {
public:
    explicit DimensionMismatch(const std::string& msg) : Error(msg) {}
};

class NotSymmetric : public Error {
public:
    explicit NotSymmetric(const std::string& msg) : Error(msg) {}
};

class LoopRejected : public Error {
public:
    explicit LoopRejected(const std::string& msg) : Error(msg) {}
};

class IndexOutOfRange : public Error {
public:
    explicit IndexOutOfRange(const std::string& msg) : Error(msg) {}
};

class TooLarge : public Error {
public:
    explicit TooLarge(const std::string& msg) : Error(msg) {}
};

class NotSignable : public Error {
public:
    explicit NotSignable(const std::string& msg) : Error(msg) {}
};

class InvalidSpec : public Error {
public:
    explicit InvalidSpec(const std::string& msg) : Error(msg) {}
};

class SignClassMismatch : public Error {
public:
    explicit SignClassMismatch(const std::string& msg) : Error(msg) {}
};

class NotIntegrallyInvertible : public Error {
public:
    explicit NotIntegrallyInvertible(const std::string& msg) : Error(msg) {}
};

class NoConvergence : public Error {
public:
    explicit NoConvergence(const std::string& msg) : Error(msg) {}
};

class NoPositiveEigenvalue : public Error {
public:
    explicit NoPositiveEigenvalue(const std::string& msg) : Error(msg) {}
};

class NonPositiveCoefficients : public Error {
public:
    explicit NonPositiveCoefficients(const std::string& msg) : Error(msg) {}
};

class NotArbitrarilyBridgeable : public Error {
public:
    explicit NotArbitrarilyBridgeable(const std::string& msg) : Error(msg) {}
};

class GenerationTooLarge : public Error {
public:
    explicit GenerationTooLarge(const std::string& msg) : Error(msg) {}
};

class UnsupportedSize : public Error {
public:
    explicit UnsupportedSize(const std::string& msg) : Error(msg) {}
};

class UnmatchedGraph : public Error {
public:
    explicit UnmatchedGraph(const std::string& msg) : Error(msg) {}
};

class ParseError : public Error {
public:
    explicit ParseError(const std::string& msg) : Error(msg) {}
};

} // namespace invgraph
