// Copyright (c) evograph contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace evograph {

// Base class for all evograph errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed input text (edge lists, delta files, manifests).
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : Error(what + " (line " + std::to_string(line) + ")"), line_(line) {}
  explicit ParseError(const std::string& what) : Error(what), line_(0) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Value outside the domain an algorithm or format requires.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Index outside the valid range (vertex ids, snapshot indices).
class RangeError : public Error {
 public:
  using Error::Error;
};

// Inputs contradict each other (delta applied to a snapshot it does not fit,
// intersection not a subset of union, declared counts that do not match).
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

// Unusable configuration (unknown algorithm, infeasible generator parameters,
// mismatched snapshot counts).
class ConfigError : public Error {
 public:
  using Error::Error;
};

// More snapshots than the compiled version-mask width can hold.
class CapacityError : public Error {
 public:
  using Error::Error;
};

// Filesystem failures.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace evograph
