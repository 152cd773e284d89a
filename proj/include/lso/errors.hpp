#ifndef LSO_ERRORS_HPP
#define LSO_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace lso {

/// Base class for every error raised by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A relation or arc set that was required to be acyclic contains a cycle.
/// `cycle` lists the vertices of one directed cycle in order.
struct CycleError : Error {
    std::vector<std::size_t> cycle;
    CycleError(std::string what, std::vector<std::size_t> cyc)
        : Error(std::move(what)), cycle(std::move(cyc)) {}
};

struct UnknownElement : Error {
    using Error::Error;
};

struct NotAnExtension : Error {
    using Error::Error;
};

struct NotAPartialOrder : Error {
    using Error::Error;
};

struct NotAutonomous : Error {
    using Error::Error;
};

struct TooLarge : Error {
    using Error::Error;
};

struct IncompleteOrientation : Error {
    using Error::Error;
};

struct ParseError : Error {
    using Error::Error;
};

// an internal invariant failed; always a bug, never an input problem
struct ContractViolation : Error {
    using Error::Error;
};

}  // namespace lso

#endif  // LSO_ERRORS_HPP
