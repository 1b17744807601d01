#pragma once

#include <stdexcept>
#include <string>

namespace sentiment {

/// Malformed or inconsistent input data (bad CSV, unknown label, schema
/// mismatch between stage files). The CLI maps this to exit code 2.
class DataError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Invalid arguments or configuration values. The CLI maps this to exit code 1.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace sentiment
