#pragma once

#include <stdexcept>
#include <string>

namespace lfac {

/// Base of every error raised by the engine.  `code()` is the stable,
/// machine-readable name used by the CLI's json error objects.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& what)
        : std::runtime_error(what), code_(std::move(code)) {}
    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

struct DivisionByZero : Error {
    explicit DivisionByZero(const std::string& what = "division by the zero scalar")
        : Error("DivisionByZero", what) {}
};

struct DomainError : Error {
    explicit DomainError(const std::string& what) : Error("DomainError", what) {}
};

struct UnsupportedTensor : Error {
    explicit UnsupportedTensor(const std::string& what) : Error("UnsupportedTensor", what) {}
};

struct UnsupportedPair : Error {
    explicit UnsupportedPair(const std::string& what) : Error("UnsupportedPair", what) {}
};

struct SimilitudeViolation : Error {
    explicit SimilitudeViolation(const std::string& what) : Error("SimilitudeViolation", what) {}
};

struct TypeConstraintViolation : Error {
    explicit TypeConstraintViolation(const std::string& what)
        : Error("TypeConstraintViolation", what) {}
};

struct CentralCharacterMismatch : Error {
    explicit CentralCharacterMismatch(const std::string& what)
        : Error("CentralCharacterMismatch", what) {}
};

struct CatalogError : Error {
    explicit CatalogError(const std::string& what) : Error("CatalogError", what) {}
};

}  // namespace lfac
