#ifndef BERGKERN_ERRORS_HPP
#define BERGKERN_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace bergkern {

// Argument outside the operation's stated domain (membership, |z| < 1, ...).
struct DomainError : std::domain_error {
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

// Evaluation at a pole of a rational function or of a hypergeometric series.
struct PoleError : std::domain_error {
    explicit PoleError(const std::string& what) : std::domain_error(what) {}
};

// A truncated series hit its term budget before reaching the tail tolerance.
struct ConvergenceError : std::runtime_error {
    explicit ConvergenceError(const std::string& what) : std::runtime_error(what) {}
};

// A formula was asked for at a removable/singular configuration (x' = 1 loci).
struct SingularArgument : std::domain_error {
    explicit SingularArgument(const std::string& what) : std::domain_error(what) {}
};

// A floating-point consistency check failed (e.g. a determinant that must be
// real came out with a large imaginary part).
struct NumericalError : std::runtime_error {
    explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace bergkern

#endif
