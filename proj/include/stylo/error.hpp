#pragma once

#include <stdexcept>
#include <string>

namespace stylo {

/// Data or precondition failure raised by the library. The CLI maps it to exit code 1.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace stylo
