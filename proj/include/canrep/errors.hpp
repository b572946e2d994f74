#pragma once

#include <stdexcept>
#include <string>

namespace canrep {

/// A mathematically invalid request: bad parameters, unmet preconditions,
/// or an input outside what the algorithms support.
class DomainError : public std::runtime_error {
public:
    DomainError(std::string code, const std::string& message) : std::runtime_error(message), code_(std::move(code)) {}
    const std::string& code() const { return code_; }

private:
    std::string code_;
};

}  // namespace canrep
