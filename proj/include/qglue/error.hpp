#pragma once

#include <stdexcept>
#include <string>

namespace qg {

// Domain-level failure with a stable machine-readable kind tag.
class DomainError : public std::runtime_error {
public:
    DomainError(std::string kind, const std::string& what)
        : std::runtime_error(kind + ": " + what), kind_(std::move(kind)) {}

    const std::string& kind() const { return kind_; }

private:
    std::string kind_;
};

[[noreturn]] inline void fail(const std::string& kind, const std::string& what) {
    throw DomainError(kind, what);
}

} // namespace qg
