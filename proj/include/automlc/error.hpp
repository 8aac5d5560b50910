#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace automlc {

/// Exception carrying a stable machine-readable code next to the human message.
/// Codes are short PascalCase identifiers such as "NonBinaryLabel" or "ShapeMismatch".
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& message)
        : std::runtime_error(code + ": " + message), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

} // namespace automlc
