#pragma once

#include <stdexcept>
#include <string>

namespace iss {

// Malformed or inconsistent input data (files, datasets, model specs).
class DataError : public std::runtime_error {
public:
    explicit DataError(const std::string& what) : std::runtime_error(what) {}
};

// Numerical failure (non-convergence, invalid intermediate values).
class NumericError : public std::runtime_error {
public:
    explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace iss
