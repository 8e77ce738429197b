#pragma once

#include <stdexcept>
#include <string>

namespace fusionrank {

/// Malformed or inconsistent input data (files, records, ids).
/// The CLI maps this to exit status 2.
struct DataError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace fusionrank
