#pragma once

#include <stdexcept>

namespace bprttd {

// Invalid or inconsistent input: bad CSV, shape mismatch, impossible
// structural zero (offset 0 with a positive count), ...
struct data_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Numerical failure while fitting or sampling: overflow in a linear
// predictor, rank-deficient design, non-convergence treated as fatal, ...
struct numeric_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace bprttd
