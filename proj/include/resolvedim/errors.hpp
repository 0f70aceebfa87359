#ifndef RESOLVEDIM_ERRORS_HPP
#define RESOLVEDIM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace resolvedim {

struct InvalidVertex : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct SelfLoopRejected : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct DisconnectedGraph : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InvalidParam : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct TooLargeForIso : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SetTooSmall : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct TooLargeForOracle : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct GuardViolated : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace resolvedim

#endif
