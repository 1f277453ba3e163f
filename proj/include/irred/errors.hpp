#pragma once

#include <stdexcept>
#include <string>

namespace irred {

// Every failure raised by the library derives from Error. The subclasses map
// onto the CLI exit codes (see tools/irred.cpp).
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InvalidInput : public Error {
public:
    using Error::Error;
};

// A rational prime dividing [O_K : Z[theta]]; Kummer-Dedekind does not apply.
class UnsupportedPrime : public Error {
public:
    using Error::Error;
};

class BadReduction : public Error {
public:
    using Error::Error;
};

class SizeCapExceeded : public Error {
public:
    using Error::Error;
};

// Field or unit-basis verification failed.
class VerificationError : public Error {
public:
    using Error::Error;
};

class DegeneracyError : public Error {
public:
    using Error::Error;
};

class ConfigError : public Error {
public:
    using Error::Error;
};

} // namespace irred
