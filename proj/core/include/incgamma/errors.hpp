#ifndef INCGAMMA_ERRORS_HPP
#define INCGAMMA_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace incgamma {

// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
public:
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

// Argument inside the domain but outside the validity region of the
// expansion being evaluated (no decreasing terms, guard breached, ...).
class ValidityError : public std::runtime_error {
public:
    explicit ValidityError(const std::string& what) : std::runtime_error(what) {}
};

// Request beyond the generated frontier of a coefficient table.
class BudgetError : public std::runtime_error {
public:
    explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

// Iterative scheme failed to converge within its iteration cap.
class ConvergenceError : public std::runtime_error {
public:
    explicit ConvergenceError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace incgamma

#endif
