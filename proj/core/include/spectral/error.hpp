// Copyright the spectral-bounds authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace spectral {

/// Base class for every error raised by the library. The CLI maps these to
/// exit code 1 (usage/IO) or attaches them to a report with the failing stage.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Parameter point outside a chart's parameter domain, or a value outside the
/// domain of a formula.
class DomainError : public Error {
public:
  using Error::Error;
};

/// The induced metric is not positive definite.
class ImmersionError : public Error {
public:
  using Error::Error;
};

class ArgumentError : public Error {
public:
  using Error::Error;
};

/// Inconsistent combination of inputs, e.g. a mesh paired with the wrong chart.
class ConfigurationError : public Error {
public:
  using Error::Error;
};

class AssemblyError : public Error {
public:
  using Error::Error;
};

class SolverError : public Error {
public:
  using Error::Error;
};

class NumericError : public Error {
public:
  using Error::Error;
};

class IoError : public Error {
public:
  using Error::Error;
};

} // namespace spectral
