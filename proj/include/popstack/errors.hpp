#pragma once

#include <stdexcept>
#include <string>

namespace popstack {

// Raised when a request exceeds a configured brute-force or enumeration cap.
// Callers can raise the cap explicitly; the library never silently truncates.
class PolicyError : public std::runtime_error {
public:
    explicit PolicyError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace popstack
