#pragma once

#include <stdexcept>
#include <string>

namespace fermat {

/// Thrown when a requested computation exceeds the configured resource
/// caps (cycle count, mu, or the advisory memory budget). The message
/// names the refused case and the cap so callers can report it verbatim.
class ResourceCapError : public std::runtime_error {
public:
    explicit ResourceCapError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace fermat
