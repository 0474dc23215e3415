#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace hstree {

// Domain error carrying a stable machine-readable kind ("TriangleViolation",
// "BetaMismatch", ...) next to the human-readable message.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& message)
        : std::runtime_error(message), kind_(std::move(kind)) {}

    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

[[noreturn]] inline void fail(std::string kind, const std::string& message) {
    throw Error(std::move(kind), message);
}

}  // namespace hstree
