// Copyright 2026 The netdist Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace netdist {

// Base class for everything thrown by the library. InputError maps to CLI
// exit code 2, NumericalError to exit code 3.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class InputError : public Error {
public:
  using Error::Error;
};

class NumericalError : public Error {
public:
  using Error::Error;
};

class DimensionMismatch : public InputError {
public:
  using InputError::InputError;
};

class ConstantColumn : public InputError {
public:
  ConstantColumn(std::int64_t column, const std::string& what)
      : InputError(what), column(column) {}
  std::int64_t column;
};

class NotStandardized : public InputError {
public:
  using InputError::InputError;
};

class NumericalDomain : public NumericalError {
public:
  using NumericalError::NumericalError;
};

class NegativeWeight : public NumericalError {
public:
  using NumericalError::NumericalError;
};

class NotPositiveDefinite : public NumericalError {
public:
  NotPositiveDefinite(int which, double min_eigenvalue, const std::string& what)
      : NumericalError(what), which(which), min_eigenvalue(min_eigenvalue) {}
  int which;              // 1 or 2, the offending argument
  double min_eigenvalue;  // after regularization
};

class EmptyGraph : public InputError {
public:
  using InputError::InputError;
};

class InfiniteSingleLinkage : public NumericalError {
public:
  using NumericalError::NumericalError;
};

class TooFewRows : public InputError {
public:
  using InputError::InputError;
};

class TooFewPairs : public InputError {
public:
  using InputError::InputError;
};

class CapExceeded : public InputError {
public:
  using InputError::InputError;
};

class DegreeTooHigh : public InputError {
public:
  using InputError::InputError;
};

}  // namespace netdist
