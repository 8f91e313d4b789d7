#pragma once

#include <stdexcept>
#include <string>

namespace seshadri {

/// Base class for every error thrown by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed user input (rational strings, JSON documents, schema violations).
/// Carries a dotted field path so the CLI can point at the offending key.
class SchemaError : public Error {
public:
    SchemaError(std::string field, const std::string& what)
        : Error(field.empty() ? what : field + ": " + what), field_(std::move(field)) {}
    const std::string& field() const { return field_; }

private:
    std::string field_;
};

class ZeroPolynomial : public Error {
public:
    ZeroPolynomial() : Error("operation requires a nonzero polynomial") {}
};

class PresentationMismatch : public Error {
public:
    PresentationMismatch() : Error("cycle classes live on different Chow presentations") {}
};

class KindMismatch : public Error {
public:
    explicit KindMismatch(const std::string& what) : Error(what) {}
};

class NonInvertible : public Error {
public:
    NonInvertible() : Error("series is not invertible: order-0 coefficient must be the unit class") {}
};

class UnsupportedPresentation : public Error {
public:
    explicit UnsupportedPresentation(const std::string& what) : Error(what) {}
};

class NotCodimensionOne : public Error {
public:
    NotCodimensionOne() : Error("formula requires a codimension-one submanifold (y = k-1)") {}
};

class PreconditionViolated : public Error {
public:
    explicit PreconditionViolated(const std::string& what) : Error(what) {}
};

class UnsupportedK : public Error {
public:
    explicit UnsupportedK(int k)
        : Error("Schur delta_1 form only available for 4 <= k <= 7, got k = " + std::to_string(k)) {}
};

class EmptyDegrees : public Error {
public:
    EmptyDegrees() : Error("complete-intersection rule needs a nonempty degree list") {}
};

class SharpFlagInvalid : public Error {
public:
    SharpFlagInvalid() : Error("the sharp quadratic case requires t = 2") {}
};

class UnknownEntry : public Error {
public:
    UnknownEntry(const std::string& name, const std::string& suggestion)
        : Error(suggestion.empty() ? "unknown catalog entry '" + name + "'"
                                   : "unknown catalog entry '" + name + "', did you mean '" + suggestion + "'?") {}
};

class BadParams : public Error {
public:
    explicit BadParams(const std::string& what) : Error(what) {}
};

} // namespace seshadri
