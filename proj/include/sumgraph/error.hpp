#pragma once

#include <stdexcept>
#include <string>

namespace sumgraph {

// All named error conditions carry a short stable code ("TrailingBits",
// "InvalidParameter", ...) next to the human-readable message.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& msg)
        : std::runtime_error(code + ": " + msg), code_(std::move(code)) {}

    const std::string& code() const { return code_; }

private:
    std::string code_;
};

}  // namespace sumgraph
