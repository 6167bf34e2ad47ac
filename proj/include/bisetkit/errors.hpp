#pragma once

#include <stdexcept>

namespace bisetkit {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
/// Bad group-spec / corpus / flag syntax.
struct parse_error : error {
    using error::error;
};
/// A documented precondition was violated by the caller.
struct precondition_error : error {
    using error::error;
};
/// Order bound or subgroup cap exceeded.
struct resource_error : error {
    using error::error;
};

}  // namespace bisetkit
