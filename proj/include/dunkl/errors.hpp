#pragma once

#include <stdexcept>
#include <string>

namespace dunkl {

/// A value lies outside the mathematical domain of an operation
/// (nu <= -1, reciprocal of a series with zero constant term, ...).
struct domain_error : std::domain_error {
    explicit domain_error(const std::string& what) : std::domain_error(what) {}
};

/// The caller combined objects that cannot be combined (mismatched Dunkl
/// parameters, wrong functional variant, unknown family name, ...).
struct usage_error : std::invalid_argument {
    explicit usage_error(const std::string& what) : std::invalid_argument(what) {}
};

/// A truncated computation would silently lose precision (requested more
/// polynomials than the series order supports).
struct precision_error : std::runtime_error {
    explicit precision_error(const std::string& what) : std::runtime_error(what) {}
};

/// An exact evaluation was requested from a functional that only has a
/// numeric route.
struct unsupported_exact_error : std::runtime_error {
    explicit unsupported_exact_error(const std::string& what) : std::runtime_error(what) {}
};

/// Numerical integration failed to reach the requested tolerance.
struct quadrature_error : std::runtime_error {
    explicit quadrature_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace dunkl
