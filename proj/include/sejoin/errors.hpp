#pragma once

#include <stdexcept>
#include <string>

namespace sejoin {

// Input outside an operation's domain (bad parameters, violated preconditions).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// An identity that must hold by construction did not. Always a bug or a
// counterexample to a stated mathematical claim; never caught silently.
class ConsistencyError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace sejoin
