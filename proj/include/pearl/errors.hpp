#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace pearl {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class RingMismatch : public Error {
 public:
  using Error::Error;
};

/// A Λ⁺ operation received an element with a negative t-exponent.
class NotPositive : public Error {
 public:
  using Error::Error;
};

class OddMaslovNumber : public Error {
 public:
  using Error::Error;
};

class UnknownGenerator : public Error {
 public:
  explicit UnknownGenerator(const std::string& id)
      : Error("unknown generator '" + id + "'"), id_(id) {}
  const std::string& id() const { return id_; }

 private:
  std::string id_;
};

/// A differential, twist, product or action term whose indices break its
/// degree law. The message names the offending term.
class DegreeViolation : public Error {
 public:
  using Error::Error;
};

class TwistDegreeViolation : public DegreeViolation {
 public:
  using DegreeViolation::DegreeViolation;
};

class InvalidData : public Error {
 public:
  using Error::Error;
};

class DSquaredNonzero : public Error {
 public:
  using Error::Error;
};

/// One nonzero entry of the commutator twist∘d + d∘twist.
struct ObstructionEntry {
  std::string source;  // y
  std::string target;  // x
  std::vector<int> exponents;
};

class TwistNotCocycle : public Error {
 public:
  TwistNotCocycle(std::string what, std::vector<ObstructionEntry> entries)
      : Error(std::move(what)), entries_(std::move(entries)) {}
  const std::vector<ObstructionEntry>& entries() const { return entries_; }

 private:
  std::vector<ObstructionEntry> entries_;
};

class NotACocycle : public Error {
 public:
  using Error::Error;
};

class NotInvertible : public Error {
 public:
  using Error::Error;
};

class WindowRequired : public Error {
 public:
  using Error::Error;
};

class OutOfWindow : public Error {
 public:
  using Error::Error;
};

class SchemaError : public Error {
 public:
  using Error::Error;
};

}  // namespace pearl
