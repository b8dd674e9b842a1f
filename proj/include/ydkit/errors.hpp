#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace ydkit {

/// Base class of every error raised by the engine.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

/// Operands live in cyclotomic fields that do not embed into one another.
class FieldMismatch : public Error {
 public:
  using Error::Error;
};

/// A numerically located root could not be certified inside the field.
class ReconstructionFailed : public Error {
 public:
  explicit ReconstructionFailed(std::size_t root_index)
      : Error("root " + std::to_string(root_index) + " could not be certified in the field"),
        index(root_index) {}
  std::size_t index;
};

/// Splitting an algebra would require leaving the current cyclotomic field.
class FieldNotSplitting : public Error {
 public:
  using Error::Error;
};

class NonSemisimple : public Error {
 public:
  using Error::Error;
};

class AmbientMismatch : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class BlockMismatch : public Error {
 public:
  using Error::Error;
};

class QuotientIllFormed : public Error {
 public:
  using Error::Error;
};

class NotAGroup : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

/// An axiom failed; `witness` holds the basis indices exhibiting the failure.
class AxiomFailure : public Error {
 public:
  AxiomFailure(std::string axiom_id, std::vector<std::size_t> witness_indices, const std::string& what)
      : Error(what), axiom(std::move(axiom_id)), witness(std::move(witness_indices)) {}
  std::string axiom;
  std::vector<std::size_t> witness;
};

class VerifyError : public AxiomFailure {
 public:
  using AxiomFailure::AxiomFailure;
};

class CheckFailed : public AxiomFailure {
 public:
  using AxiomFailure::AxiomFailure;
};

}  // namespace ydkit
