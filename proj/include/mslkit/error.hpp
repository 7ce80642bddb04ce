#pragma once

#include <stdexcept>
#include <string>

namespace mslkit {

/// Malformed or inconsistent user input (bad sequence, bad file, bad
/// parameter). The CLI maps this to exit code 2.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An internal consistency check failed. The CLI maps this to exit code 3.
class InvariantError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

namespace detail {

inline void require_input(bool cond, const std::string& what) {
    if(!cond) throw InputError(what);
}

inline void require_invariant(bool cond, const std::string& what) {
    if(!cond) throw InvariantError(what);
}

} // namespace detail
} // namespace mslkit
