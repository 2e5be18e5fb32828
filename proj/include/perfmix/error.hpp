#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace perfmix {

// Library errors carry a short machine-readable code ("NotPrimePower",
// "SpaceTooLarge", ...) in addition to the human-readable message.
// Precondition violations throw; verification failures do not (they come
// back as FAIL certificates instead).
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& what)
        : std::runtime_error(code + ": " + what), code_(std::move(code)) {}

    const std::string& code() const { return code_; }

private:
    std::string code_;
};

[[noreturn]] inline void fail(const std::string& code, const std::string& what) {
    throw Error(code, what);
}

inline void require(bool ok, const std::string& code, const std::string& what) {
    if (!ok) fail(code, what);
}

} // namespace perfmix
