#ifndef POINCARE_ERRORS_HPP
#define POINCARE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace poincare {

// Exit codes used by the CLI front end. Library code throws; the CLI maps
// the exception to the corresponding process exit code.
enum class ExitCode : int {
    ok = 0,
    verification_failure = 1,
    parse_error = 2,
    invariant_violation = 3,
    not_in_e2 = 4,
    chart_violation = 5,
};

class Error : public std::runtime_error {
public:
    Error(ExitCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
    ExitCode exit_code() const { return code_; }

private:
    ExitCode code_;
};

class ParseError : public Error {
public:
    explicit ParseError(const std::string& what) : Error(ExitCode::parse_error, what) {}
};

class InvariantViolation : public Error {
public:
    explicit InvariantViolation(const std::string& what)
        : Error(ExitCode::invariant_violation, what) {}
};

class NonHermitianError : public InvariantViolation {
public:
    explicit NonHermitianError(const std::string& what) : InvariantViolation(what) {}
};

class SingularMatrixError : public InvariantViolation {
public:
    explicit SingularMatrixError(const std::string& what) : InvariantViolation(what) {}
};

class UnsupportedSpinError : public InvariantViolation {
public:
    explicit UnsupportedSpinError(const std::string& what) : InvariantViolation(what) {}
};

// Factoring a momentum-stabilizing element failed the triangularity or
// unit-modulus test. Mathematically unreachable from valid inputs; seeing it
// signals an implementation or tolerance fault.
class NotInE2Error : public Error {
public:
    explicit NotInE2Error(const std::string& what) : Error(ExitCode::not_in_e2, what) {}
};

class ChartViolation : public Error {
public:
    explicit ChartViolation(const std::string& what) : Error(ExitCode::chart_violation, what) {}
};

class NotInOverlapError : public ChartViolation {
public:
    explicit NotInOverlapError(const std::string& what) : ChartViolation(what) {}
};

} // namespace poincare

#endif
