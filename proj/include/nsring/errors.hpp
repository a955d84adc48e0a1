#pragma once

#include <stdexcept>
#include <string>

namespace nsring {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Construction / input errors.
struct EmptyGenerators : Error {
    using Error::Error;
};
struct GcdNotOne : Error {
    using Error::Error;
};
struct MultiplicityOne : Error {
    using Error::Error;
};

// Ideal arithmetic errors.
struct SemigroupMismatch : Error {
    using Error::Error;
};
struct NotContained : Error {
    using Error::Error;
};
struct InfiniteLength : Error {
    using Error::Error;
};

// Precondition failures of the higher-level checks.
struct NotTwoGenerated : Error {
    using Error::Error;
};
struct ConditionNotSatisfied : Error {
    using Error::Error;
};
struct PreconditionNotMet : Error {
    using Error::Error;
};

// Enumeration budget.
struct EnumerationBudgetExceeded : Error {
    using Error::Error;
};

} // namespace nsring
