// Copyright 2026 The Shoelace Authors
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

namespace shoelace {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input ring cannot form a usable polygon (too few vertices, non-finite
/// coordinates, repeated consecutive vertices, zero area), or a segment has
/// zero length.
class DegenerateInput : public Error {
 public:
  using Error::Error;
};

/// An edge index was outside [0, n).
class BadIndex : public Error {
 public:
  using Error::Error;
};

/// The operation is only defined for convex polygons and the input is not
/// convex.
class NotConvex : public Error {
 public:
  using Error::Error;
};

/// A numeric result violated a mathematically guaranteed bound; signals
/// corruption, never user error.
class InternalInconsistency : public Error {
 public:
  using Error::Error;
};

/// An operation that needs at least one element received none.
class EmptyInput : public Error {
 public:
  using Error::Error;
};

/// No monotonic clock is available for timing.
class ClockUnavailable : public Error {
 public:
  using Error::Error;
};

/// A file or text input could not be parsed.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace shoelace
