#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace limitada {

// Bad user-supplied data: unknown symbol, malformed word, impossible parameters.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Precondition of an operation not met by the machine it was handed.
class ContractError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// A configured budget (enumeration size, configurations, subset states) was exceeded.
class ResourceError : public std::runtime_error {
public:
    ResourceError(const std::string& what, std::size_t reached)
        : std::runtime_error(what + " (reached " + std::to_string(reached) + ")"), reached_(reached) {}
    std::size_t reached() const noexcept { return reached_; }

private:
    std::size_t reached_;
};

}  // namespace limitada
