#pragma once

#include <stdexcept>
#include <string>

namespace delpezzo {

// Vectors from different Picard lattices (different number of blown-up points).
class DimensionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Input outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Linear-form configuration not in general position.
class GeometryError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Degeneration model that violates its contract or has no integral solution.
class ModelError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed or missing user input.
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

}  // namespace delpezzo
