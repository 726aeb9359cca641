// Copyright 2026 The mqsym Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace mqsym {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Argument outside an operation's domain (bad label, digit, size mismatch, ...).
class InvalidArgument : public Error {
  public:
    using Error::Error;
};

/// A state whose norm is below the zero threshold where a nonzero state is required.
class ZeroStateError : public Error {
  public:
    explicit ZeroStateError(const std::string &what = "zero state") : Error(what) {}
};

/// Requested Hilbert space does not fit dense storage.
class DimensionOverflow : public Error {
  public:
    using Error::Error;
};

/// Malformed mqstate-v1 / mqdm-v1 document.
class ParseError : public Error {
  public:
    using Error::Error;
};

/// Result violated an internal consistency bound (e.g. reconstruction residual).
class ToleranceError : public Error {
  public:
    using Error::Error;
};

}  // namespace mqsym
