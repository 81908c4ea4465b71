#ifndef FOLIATION_ERRORS_HPP
#define FOLIATION_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace foliation {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// nvars / cap / scalar-mode mismatch between operands
class DimensionError : public Error {
public:
    using Error::Error;
};

class ModeError : public Error {
public:
    using Error::Error;
};

// bad user input (parse errors, out-of-range caps, empty task list, ...)
class ValidationError : public Error {
public:
    using Error::Error;
};

// substitution map with nonzero constant term
class CompositionError : public Error {
public:
    using Error::Error;
};

class SingularMatrixError : public Error {
public:
    using Error::Error;
};

// a homological solve hit a resonant target; carries the offending
// multidegrees (full n-variable exponent vectors) and component indices
class ResonanceObstruction : public Error {
public:
    ResonanceObstruction(const std::string& what,
                         std::vector<std::pair<int, std::vector<int>>> offenders)
        : Error(what), offenders_(std::move(offenders)) {}

    const std::vector<std::pair<int, std::vector<int>>>& offenders() const { return offenders_; }

private:
    std::vector<std::pair<int, std::vector<int>>> offenders_;
};

// coordinate reconstruction failed its shape precondition; witness says where
class ReconstructionError : public Error {
public:
    ReconstructionError(const std::string& what, std::string witness)
        : Error(what), witness_(std::move(witness)) {}

    const std::string& witness() const { return witness_; }

private:
    std::string witness_;
};

class UnsupportedError : public Error {
public:
    using Error::Error;
};

}  // namespace foliation

#endif
