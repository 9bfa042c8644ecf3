#pragma once

#include <stdexcept>
#include <string>

namespace ambigame {

/// Base class for all library errors.
class error : public std::runtime_error {
public:
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

/// A game file or in-memory GameSpec violates an invariant.
class validation_error : public error {
public:
    explicit validation_error(const std::string& what) : error(what) {}
};

/// The multi-dimensional lattice join/meet construction produced a
/// signed mass below the accepted tolerance.
class lattice_construction_error : public error {
public:
    explicit lattice_construction_error(const std::string& what) : error(what) {}
};

/// An enumeration would exceed its configured cap.
class cap_exceeded_error : public error {
public:
    explicit cap_exceeded_error(const std::string& what) : error(what) {}
};

} // namespace ambigame
