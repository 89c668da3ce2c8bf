#pragma once

#include <stdexcept>
#include <string>

namespace stirling {

/// Argument outside the physical domain of an operation (non-positive width,
/// temperature, mass, level index, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A partition-function series hit SeriesPolicy::max_terms before its tail
/// dropped below the requested tolerance.
class SeriesCapExceeded : public std::runtime_error {
public:
    SeriesCapExceeded(std::size_t terms, double tail_ratio);

    std::size_t terms() const noexcept { return terms_; }
    double tail_ratio() const noexcept { return tail_ratio_; }

private:
    std::size_t terms_;
    double tail_ratio_;
};

/// The work decomposition needs an exactly degenerate (symmetric) partition.
class UnsupportedDecomposition : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Exhaustive enumeration requested beyond its tractable size.
class EnumerationTooLarge : public std::length_error {
public:
    using std::length_error::length_error;
};

}  // namespace stirling
