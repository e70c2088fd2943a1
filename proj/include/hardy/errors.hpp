#pragma once

#include <stdexcept>
#include <string>

namespace hardy {

// Failure classes map onto process exit codes: bad arguments or malformed
// input (1), data that violates a mathematical precondition (2), I/O (3).
enum class ErrorKind { validation = 1, domain = 2, io = 3 };

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& msg) : std::runtime_error(msg), kind_(kind) {}
    ErrorKind kind() const { return kind_; }
    int exit_code() const { return static_cast<int>(kind_); }

private:
    ErrorKind kind_;
};

struct InvalidCoefficient : Error {
    explicit InvalidCoefficient(const std::string& msg) : Error(ErrorKind::validation, msg) {}
};

struct AliasingError : Error {
    explicit AliasingError(const std::string& msg) : Error(ErrorKind::validation, msg) {}
};

struct BandError : Error {
    explicit BandError(const std::string& msg) : Error(ErrorKind::validation, msg) {}
};

struct UnsupportedExponent : Error {
    explicit UnsupportedExponent(const std::string& msg) : Error(ErrorKind::validation, msg) {}
};

struct GridMismatch : Error {
    explicit GridMismatch(const std::string& msg) : Error(ErrorKind::validation, msg) {}
};

struct ParameterError : Error {
    explicit ParameterError(const std::string& msg) : Error(ErrorKind::validation, msg) {}
};

struct InvalidInput : Error {
    explicit InvalidInput(const std::string& msg) : Error(ErrorKind::validation, msg) {}
};

struct MissingModel : Error {
    explicit MissingModel(const std::string& msg) : Error(ErrorKind::validation, msg) {}
};

struct FitError : Error {
    explicit FitError(const std::string& msg) : Error(ErrorKind::validation, msg) {}
};

// Inputs that are structurally fine but mathematically outside the theory.
struct NotAnalytic : Error {
    explicit NotAnalytic(const std::string& msg) : Error(ErrorKind::domain, msg) {}
};

struct ZeroFunction : Error {
    explicit ZeroFunction(const std::string& msg) : Error(ErrorKind::domain, msg) {}
};

struct DomainError : Error {
    explicit DomainError(const std::string& msg) : Error(ErrorKind::domain, msg) {}
};

// Signals a grid pathology that exact arithmetic rules out.
struct NumericalConsistencyError : Error {
    explicit NumericalConsistencyError(const std::string& msg) : Error(ErrorKind::domain, msg) {}
};

struct IoError : Error {
    explicit IoError(const std::string& msg) : Error(ErrorKind::io, msg) {}
};

}  // namespace hardy
