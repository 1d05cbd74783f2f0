#pragma once

#include <stdexcept>
#include <string>

namespace icv {

// Bad caller input: dimension mismatches, malformed configs, violated
// preconditions.
struct InputError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A sampling or enumeration step found the effective domain empty.
struct DomainEmptyError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// "Cannot happen" paths (e.g. simplex pivot budget exhausted under Bland's
// rule). Treated as a bug signal, not a user error.
struct InternalError : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace icv
