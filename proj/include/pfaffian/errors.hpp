#pragma once

#include <stdexcept>
#include <string>

namespace pfaffian {

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct DivisionByZero : Error {
    DivisionByZero() : Error("division by zero") {}
};

struct DenominatorDivisibleByP : Error {
    DenominatorDivisibleByP() : Error("denominator divisible by the prime") {}
};

struct ModulusMismatch : Error {
    ModulusMismatch() : Error("operands live over different primes") {}
};

struct ArityMismatch : Error {
    explicit ArityMismatch(const std::string& what = "arity mismatch") : Error(what) {}
};

struct DimensionMismatch : Error {
    explicit DimensionMismatch(const std::string& what = "dimension mismatch") : Error(what) {}
};

struct IndexOutOfRange : Error {
    IndexOutOfRange() : Error("index out of range") {}
};

struct UnsupportedType : Error {
    explicit UnsupportedType(const std::string& label)
        : Error("unsupported root system type: " + label) {}
};

struct LengthMismatch : Error {
    explicit LengthMismatch(const std::string& what = "length mismatch") : Error(what) {}
};

struct JacobiFailure : Error {
    JacobiFailure() : Error("supplied delta part violates the Jacobi identity") {}
};

struct EigenvalueZero : Error {
    EigenvalueZero() : Error("diagonal eigenvalue vanishes mod p") {}
};

struct HypothesisFailed : Error {
    HypothesisFailed() : Error("rank of the bivector differs from its log-canonical part") {}
};

struct CertificateNotFound : Error {
    CertificateNotFound() : Error("no completing set of torus directions found") {}
};

struct NotASplitting : Error {
    NotASplitting() : Error("input does not define a Frobenius splitting") {}
};

struct BadPrime : Error {
    explicit BadPrime(const std::string& what = "prime rejected") : Error(what) {}
};

struct ExpansionTooLarge : Error {
    ExpansionTooLarge() : Error("polynomial expansion exceeds the term guard") {}
};

struct ParseError : Error {
    explicit ParseError(const std::string& what) : Error("parse error: " + what) {}
};

struct Overflow : Error {
    Overflow() : Error("integer overflow in exact arithmetic") {}
};

}  // namespace pfaffian
