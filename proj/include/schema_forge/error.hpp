#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace schema_forge {

// Library-wide error carrying a stable machine-readable code (e.g. "E-ITER-RANGE")
// next to the human message. The codes are documented in docs/rules.md.
class SchemaError : public std::runtime_error {
public:
    SchemaError(std::string code, const std::string& message)
        : std::runtime_error(code + ": " + message), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

}  // namespace schema_forge
