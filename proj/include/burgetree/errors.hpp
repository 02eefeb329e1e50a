#pragma once

#include <stdexcept>
#include <string>

namespace burgetree {

// Parameters are outside the mathematical domain of an operation
// (noninteger exponent, pair not coprime, case parameters off-grid).
class DomainError : public std::domain_error {
public:
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

}  // namespace burgetree
