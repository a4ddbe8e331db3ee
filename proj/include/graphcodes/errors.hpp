#pragma once

#include <stdexcept>

namespace graphcodes {

/// An enumeration or solver cap was exceeded. Distinct from precondition
/// violations (std::invalid_argument) so callers can map it to its own exit
/// code.
struct BudgetError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace graphcodes
