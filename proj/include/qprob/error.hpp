#pragma once

#include <stdexcept>
#include <string>

namespace qprob {

// Base class for everything this library throws on purpose.  Callers that
// want a single catch-all can catch qprob::Error; the subclasses distinguish
// the broad failure modes named throughout the interface docs.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what_arg) : std::runtime_error(what_arg) {}
};

// Mixing objects that belong to different algebras / grids, referencing an
// unknown atom label, malformed partitions, and similar shape mismatches.
class StructuralError : public Error {
public:
  explicit StructuralError(const std::string& what_arg) : Error(what_arg) {}
};

// An operation whose cost is exponential in the atom count was asked to run
// past its configured cap.
class CapacityError : public Error {
public:
  explicit CapacityError(const std::string& what_arg) : Error(what_arg) {}
};

// A precondition of the requested operation does not hold for this input
// (e.g. normalizing the zero measure, conditioning on a null event).
class ContractError : public Error {
public:
  explicit ContractError(const std::string& what_arg) : Error(what_arg) {}
};

// Unreadable or out-of-schema external input (JSON files, rational literals,
// command-line values).
class ParseError : public Error {
public:
  explicit ParseError(const std::string& what_arg) : Error(what_arg) {}
};

}  // namespace qprob
