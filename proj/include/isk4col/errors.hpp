#pragma once

#include <stdexcept>
#include <string>

namespace isk4col {

/// Base of every error raised by the library. The CLI maps the concrete
/// subclasses onto process exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input that cannot be turned into a simple graph (bad ids, self-loops,
/// unparsable files).
class MalformedInput : public Error {
 public:
  using Error::Error;
};

/// A documented precondition of an operation does not hold.
class ContractViolation : public Error {
 public:
  using Error::Error;
};

/// An exact oracle was asked to work beyond its configured size budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// A generator could not produce a verified graph within its retries.
class GenerationError : public Error {
 public:
  using Error::Error;
};

/// The structure-directed pipeline met a graph it cannot handle (an
/// unclassified basic leaf, no dual colorings, an improper merge). The
/// offending subgraph is carried along in serialized form for triage.
class ClassificationFailure : public Error {
 public:
  ClassificationFailure(const std::string& what, std::string subgraph)
      : Error(what), subgraph_(std::move(subgraph)) {}

  const std::string& subgraph() const noexcept { return subgraph_; }

 private:
  std::string subgraph_;
};

}  // namespace isk4col
