#ifndef FIXPT_ERRORS_HPP
#define FIXPT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace fixpt {

/// Malformed or inconsistent input (bad documents, non-simplicial maps, d^2 != 0, ...).
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The computation needs a group class or cell structure that is not supported.
class UnsupportedError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A result depends on a twisted-conjugacy comparison that could not be decided.
class IndeterminateError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A map cannot be realized on the given cell structure.
class NotConstructibleError : public UnsupportedError {
public:
    using UnsupportedError::UnsupportedError;
};

} // namespace fixpt

#endif
