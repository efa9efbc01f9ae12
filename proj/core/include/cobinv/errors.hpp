#ifndef COBINV_ERRORS_HPP
#define COBINV_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace cobinv {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct AlphabetMismatch : Error {
    explicit AlphabetMismatch(const std::string& msg) : Error(msg) {}
};

// Exact division failed; `term` identifies the offending monomial.
struct DivisibilityError : Error {
    std::string term;
    DivisibilityError(const std::string& msg, std::string term_)
        : Error(msg), term(std::move(term_)) {}
};

// Degree bound or series order exhausted.
struct WindowError : Error {
    explicit WindowError(const std::string& msg) : Error(msg) {}
};

// Lattice membership failed; `residual` is a printable description of what is left.
struct NotInLattice : Error {
    std::string residual;
    NotInLattice(const std::string& msg, std::string residual_)
        : Error(msg), residual(std::move(residual_)) {}
};

struct ParseError : Error {
    explicit ParseError(const std::string& msg) : Error(msg) {}
};

}  // namespace cobinv

#endif
