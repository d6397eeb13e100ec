// Copyright 2026 the msvf authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#pragma once

#include <stdexcept>
#include <string>

namespace msvf {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A set constructor or normalization received no points/intervals.
class EmptySetError : public Error {
public:
  using Error::Error;
};

/// Two operands live in different ambient dimensions.
class DimensionMismatch : public Error {
public:
  using Error::Error;
};

/// Mixed representation kinds (interval union vs point cloud).
class KindMismatch : public Error {
public:
  using Error::Error;
};

/// Coefficient/set sequence lengths disagree.
class LengthMismatch : public Error {
public:
  using Error::Error;
};

/// An evaluation point lies outside an operator's validity domain.
class DomainError : public Error {
public:
  using Error::Error;
};

/// The requested operator cannot be formed (e.g. Minkowski with negative weights).
class UnsupportedOperator : public Error {
public:
  using Error::Error;
};

/// Malformed input document or CSV request.
class ParseError : public Error {
public:
  using Error::Error;
};

}  // namespace msvf
