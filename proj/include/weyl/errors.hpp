#pragma once

#include <stdexcept>
#include <string>

namespace weyl {

/// Well-formed input that violates a mathematical precondition (e.g. [P, Q] != 1).
class DomainError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Input outside the range the certifier is proven to cover.
class OutOfScopeError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace weyl
