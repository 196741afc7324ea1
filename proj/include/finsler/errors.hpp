#pragma once

#include <stdexcept>
#include <string>

namespace finsler {

/// Input outside the mathematical domain of an operation (zero vector,
/// s outside the phi domain, phi non-positive at the evaluation point, ...).
class DomainError : public std::domain_error {
public:
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// A strong-convexity / Minkowski-norm condition failed where it was required.
class ValidityError : public std::runtime_error {
public:
    explicit ValidityError(const std::string& what) : std::runtime_error(what) {}
};

/// Evaluation requested at (or across) a singularity of the phi family.
class SingularityError : public std::runtime_error {
public:
    SingularityError(const std::string& what, double where)
        : std::runtime_error(what), location(where) {}
    double location;
};

/// Numerical machinery gave up: quadrature budget exhausted, frame rank
/// deficiency, integration aborted near the slit.
class DegeneracyError : public std::runtime_error {
public:
    explicit DegeneracyError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace finsler
