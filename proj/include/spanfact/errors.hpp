#pragma once

#include <stdexcept>
#include <string>

namespace spanfact {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad arguments, malformed input files, out-of-contract calls.
class UsageError : public Error {
 public:
  using Error::Error;
};

/// A structural guarantee the construction relies on failed at runtime.
/// This is the loudest category: it does not mean "bad input", it means a
/// verified-by-construction claim did not hold and must be investigated.
class InternalInconsistencyError : public Error {
 public:
  using Error::Error;
};

class NotRegularError : public Error {
 public:
  NotRegularError(int vertex, int in_degree, int out_degree)
      : Error("vertex " + std::to_string(vertex) + " has in-degree " +
              std::to_string(in_degree) + " and out-degree " +
              std::to_string(out_degree)),
        vertex(vertex),
        in_degree(in_degree),
        out_degree(out_degree) {}
  int vertex;
  int in_degree;
  int out_degree;
};

class DisconnectedError : public Error {
 public:
  DisconnectedError(int source, int unreachable)
      : Error("vertex " + std::to_string(unreachable) +
              " is unreachable from vertex " + std::to_string(source)),
        source(source),
        unreachable(unreachable) {}
  int source;
  int unreachable;
};

class BadParamsError : public UsageError {
 public:
  using UsageError::UsageError;
};

class BadFactorIndexError : public UsageError {
 public:
  using UsageError::UsageError;
};

class WordsTooLongError : public UsageError {
 public:
  using UsageError::UsageError;
};

class MatchingFailedError : public InternalInconsistencyError {
 public:
  using InternalInconsistencyError::InternalInconsistencyError;
};

class FactorNotPermutationError : public InternalInconsistencyError {
 public:
  using InternalInconsistencyError::InternalInconsistencyError;
};

class SpanningFailedError : public InternalInconsistencyError {
 public:
  SpanningFailedError(int vertex, int word_a, int word_b)
      : InternalInconsistencyError(
            "word list is not spanning: from vertex " + std::to_string(vertex) +
            " words " + std::to_string(word_a) + " and " +
            std::to_string(word_b) + " reach the same endpoint"),
        vertex(vertex),
        word_a(word_a),
        word_b(word_b) {}
  int vertex;
  int word_a;
  int word_b;
};

class InjectionInfeasibleError : public InternalInconsistencyError {
 public:
  explicit InjectionInfeasibleError(int tail_node)
      : InternalInconsistencyError(
            "time-sharing injection infeasible at tree node " +
            std::to_string(tail_node)),
        tail_node(tail_node) {}
  int tail_node;
};

class BadOrderError : public UsageError {
 public:
  using UsageError::UsageError;
};

class NotIrreducibleError : public UsageError {
 public:
  using UsageError::UsageError;
};

class IdentityGeneratorError : public UsageError {
 public:
  using UsageError::UsageError;
};

class CapExceededError : public UsageError {
 public:
  using UsageError::UsageError;
};

class ConditionViolatedError : public Error {
 public:
  ConditionViolatedError(std::string which, std::string witness)
      : Error("coset condition (" + which + ") violated: " + witness),
        which(std::move(which)),
        witness(std::move(witness)) {}
  std::string which;
  std::string witness;
};

}  // namespace spanfact
