#pragma once

#include <stdexcept>
#include <string>

namespace robin {

// Thrown when an enumeration would exceed a configured size cap.
class resource_error : public std::runtime_error {
public:
    explicit resource_error(const std::string& what) : std::runtime_error(what) {}
};

// Thrown when a root search fails to locate a sign change within its
// iteration cap.  Indicates an accuracy bug, not bad user input.
class convergence_error : public std::runtime_error {
public:
    explicit convergence_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace robin
