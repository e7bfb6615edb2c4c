// Copyright 2026 The sloccdet Authors
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

#include <stdexcept>
#include <string>

namespace slocc {

/// Base class for all errors thrown by this library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Malformed input (state files, number tokens).
class ParseError : public Error {
  public:
    using Error::Error;
};

/// Argument outside the mathematical domain (odd n, index out of range, ...).
class DomainError : public Error {
  public:
    using Error::Error;
};

/// A local operator chain contains an operator with vanishing determinant.
class NonInvertibleError : public Error {
  public:
    using Error::Error;
};

/// Probe states could not pin a unique target invariant for a transposition.
class AmbiguousMatchError : public Error {
  public:
    using Error::Error;
};

/// A permuted invariant matched no entry of the invariant set at all.
class NoMatchError : public Error {
  public:
    using Error::Error;
};

} // namespace slocc
