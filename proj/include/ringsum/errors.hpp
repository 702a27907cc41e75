#ifndef RINGSUM_ERRORS_HPP
#define RINGSUM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ringsum {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Mathematically valid negative answers and user mistakes.
struct NotSimpleTower : Error {
    using Error::Error;
};
struct NotInProductGroup : Error {
    using Error::Error;
};
struct UnsupportedBase : Error {
    using Error::Error;
};
struct NotRepresentable : Error {
    NotRepresentable(const std::string& msg, long shift) : Error(msg), parameterShift(shift) {}
    long parameterShift;
};
struct PoleAtPoint : Error {
    PoleAtPoint(const std::string& msg, long k) : Error(msg), index(k) {}
    long index;
};

// Configured resource caps; mapped to CLI exit code 3.
struct CapExceeded : Error {
    using Error::Error;
};
struct LambdaOverflow : CapExceeded {
    using CapExceeded::CapExceeded;
};

} // namespace ringsum

#endif
