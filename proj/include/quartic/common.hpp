#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace quartic {

using i64 = std::int64_t;
using u64 = std::uint64_t;
using i128 = __int128;
using u128 = unsigned __int128;

/// Input violates an operation's contract. Maps to CLI exit status 2.
struct PreconditionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// An exact enumeration would exceed the configured budget. CLI exit status 3.
struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A search that is guaranteed to succeed came up empty. This always
/// indicates an implementation bug, never a property of the input.
/// CLI exit status 4.
struct TheoremViolation : std::logic_error {
    using std::logic_error::logic_error;
};

struct SingleClassError : PreconditionError {
    using PreconditionError::PreconditionError;
};
struct HypothesisViolated : PreconditionError {
    using PreconditionError::PreconditionError;
};
struct DependentForms : PreconditionError {
    using PreconditionError::PreconditionError;
};

/// Caps for the exact-counting enumerations. Defaults are desk-scale:
/// they fail fast with BudgetExceeded instead of thrashing.
struct Budget {
    u64 max_multiset_entries = 200'000'000;
    u64 max_join_pairs = 4'000'000'000;
    u64 max_phase_ops = 400'000'000;
    u64 max_solutions = 10'000'000;
};

}  // namespace quartic
