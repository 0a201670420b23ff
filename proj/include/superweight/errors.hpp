#pragma once

#include <stdexcept>
#include <string>

namespace superweight {

// Domain-level failure with a stable machine-readable name.  The CLI maps
// these to exit status 1 and prints "name: message" on stderr.
class DomainError : public std::runtime_error {
public:
    DomainError(std::string name, const std::string& message)
        : std::runtime_error(name + ": " + message), name_(std::move(name)) {}

    const std::string& name() const { return name_; }

private:
    std::string name_;
};

[[noreturn]] inline void fail(const std::string& name, const std::string& message) {
    throw DomainError(name, message);
}

} // namespace superweight
