// Copyright 2026 The Sidelink Authors
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

#ifndef SIDELINK_ERRORS_H_
#define SIDELINK_ERRORS_H_

#include <stdexcept>
#include <string>

namespace sidelink {

// Base class for every error raised by the library. Callers that only need
// to report failures can catch this; the subclasses let tests and the CLI
// tell the failure categories apart.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Matrix shapes do not agree with each other or with a partition.
class DimensionError : public Error {
 public:
  using Error::Error;
};

// A weight is NaN, infinite or negative.
class InvalidWeightError : public Error {
 public:
  using Error::Error;
};

// An exhaustive procedure was asked to run beyond its enumeration guard.
class SizeLimitError : public Error {
 public:
  using Error::Error;
};

class InvalidParameterError : public Error {
 public:
  using Error::Error;
};

class BoundsError : public Error {
 public:
  using Error::Error;
};

class NumericError : public Error {
 public:
  using Error::Error;
};

// A post-condition that the algorithms guarantee was observed to fail.
class InternalInvariantError : public Error {
 public:
  using Error::Error;
};

// More vehicles than subframes: some vehicle would go unserved.
class OverloadError : public Error {
 public:
  using Error::Error;
};

class InvalidConfigError : public Error {
 public:
  using Error::Error;
};

class EmptyInputError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace sidelink

#endif  // SIDELINK_ERRORS_H_
