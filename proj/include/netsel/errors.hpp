#pragma once

#include <stdexcept>
#include <string>

namespace netsel {

// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// A pairwise comparison matrix is missing one or more upper-triangle judgments.
class IncompleteJudgmentsError : public Error {
public:
    using Error::Error;
};

// A judgment value is outside Saaty's admissible scale, or a judgment key is
// out of range.
class InvalidJudgmentError : public Error {
public:
    using Error::Error;
};

// A weight vector contains a zero component where a division by it is required.
class DegenerateWeightsError : public Error {
public:
    using Error::Error;
};

// A local priority vector does not fit the supermatrix block it is assigned to.
class InvalidPriorityError : public Error {
public:
    using Error::Error;
};

// The supermatrix limit did not stabilize within the iteration budget.
class NoLimitError : public Error {
public:
    using Error::Error;
};

// A hierarchy is missing a level-3 priority vector for an active leaf criterion.
class IncompleteHierarchyError : public Error {
public:
    using Error::Error;
};

// Mismatched matrix/vector dimensions.
class DimensionError : public Error {
public:
    using Error::Error;
};

// History state lacks an entry for a network present in the candidate set.
class IncompleteHistoryError : public Error {
public:
    using Error::Error;
};

// Closeness scores do not cover exactly the networks tracked by the history.
class IncompleteScoresError : public Error {
public:
    using Error::Error;
};

// A judgment matrix failed the CR < 0.1 consistency gate.
class InconsistentJudgmentsError : public Error {
public:
    using Error::Error;
};

// Malformed or semantically invalid configuration input.
class ConfigError : public Error {
public:
    using Error::Error;
};

// Report serialization failed; partially written files have been removed.
class EmitError : public Error {
public:
    using Error::Error;
};

}  // namespace netsel
