#ifndef ZPAT_ERROR_HPP
#define ZPAT_ERROR_HPP

#include <stdexcept>
#include <string>

namespace zpat {

/// Base class of every exception thrown by the library.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class position_out_of_range : public error {
public:
    using error::error;
};

class flip_not_allowed : public error {
public:
    using error::error;
};

class invalid_parameters : public error {
public:
    using error::error;
};

class dimension_mismatch : public error {
public:
    using error::error;
};

class budget_exceeded : public error {
public:
    using error::error;
};

/// Raised when an input is outside the supported domain of an operation
/// (e.g. a diagonal position passed to chi, a degree above the socle).
class unsupported_input : public error {
public:
    using error::error;
};

} // namespace zpat

#endif // ZPAT_ERROR_HPP
