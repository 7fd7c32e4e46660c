#ifndef DFRC_ERRORS_HPP
#define DFRC_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dfrc {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ConfigError : public Error {
public:
    using Error::Error;
};

// Requested mask length exceeds what one maximal LFSR period can provide.
class InsufficientSequenceError : public Error {
public:
    using Error::Error;
};

class InvalidSeedError : public Error {
public:
    using Error::Error;
};

class EmptyInputError : public Error {
public:
    using Error::Error;
};

class ShapeError : public Error {
public:
    using Error::Error;
};

// Reservoir state left the finite range; carries the flat step index at
// which it happened and the last finite state value seen before that.
class StateDivergenceError : public Error {
public:
    StateDivergenceError(std::size_t step, double last_finite)
        : Error("reservoir state diverged at step " + std::to_string(step) +
                " (last finite state " + std::to_string(last_finite) + ")"),
          step_(step),
          last_finite_(last_finite) {}

    std::size_t step() const noexcept { return step_; }
    double last_finite_state() const noexcept { return last_finite_; }

private:
    std::size_t step_;
    double last_finite_;
};

class DegenerateTargetError : public Error {
public:
    using Error::Error;
};

// Text ingestion failure; carries the 1-based line number.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t line)
        : Error(what + " (line " + std::to_string(line) + ")"), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

class IoError : public Error {
public:
    using Error::Error;
};

class TaskError : public Error {
public:
    using Error::Error;
};

}  // namespace dfrc

#endif  // DFRC_ERRORS_HPP
