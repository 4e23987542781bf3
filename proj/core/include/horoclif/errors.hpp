#pragma once

#include <stdexcept>
#include <string>

namespace horoclif {

// Every validation failure carries the failing clause and a numeric residual,
// so callers (and the CLI) can serialize {clause, residual}.
struct Error : std::runtime_error {
  std::string clause;
  double residual;

  Error(const std::string& kind, const std::string& clause_, double residual_)
      : std::runtime_error(kind + ": " + clause_), clause(clause_), residual(residual_) {}
};

struct DomainError : Error {
  DomainError(const std::string& clause_, double residual_ = 0.0)
      : Error("domain error", clause_, residual_) {}
};

struct NonInvertible : Error {
  NonInvertible(const std::string& clause_, double residual_)
      : Error("non-invertible", clause_, residual_) {}
};

struct InvalidSpinor : Error {
  InvalidSpinor(const std::string& clause_, double residual_)
      : Error("invalid spinor", clause_, residual_) {}
};

struct InvalidMatrix : Error {
  InvalidMatrix(const std::string& clause_, double residual_)
      : Error("invalid matrix", clause_, residual_) {}
};

struct Degenerate : Error {
  Degenerate(const std::string& clause_, double residual_)
      : Error("degenerate", clause_, residual_) {}
};

struct SharedCenter : Error {
  SharedCenter(const std::string& clause_, double residual_)
      : Error("shared center", clause_, residual_) {}
};

}  // namespace horoclif
