// Copyright 2026 The sepdraw Authors.
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

#ifndef SEPDRAW_ERRORS_HPP_
#define SEPDRAW_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace sepdraw {

// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input: bad labels, parse errors, violated preconditions.
class InputError : public Error {
 public:
  using Error::Error;
};

// A 4- or 5-vertex subrotation that is not realizable was encountered.
class RealizabilityError : public Error {
 public:
  using Error::Error;
};

// The constrained realization search found no drawing.
class NotRealizableError : public Error {
 public:
  using Error::Error;
};

// A recursive construction reached a sub-instance without a usable
// separator edge. The input lies outside the guaranteed class.
class NoSeparatorEdgeError : public Error {
 public:
  using Error::Error;
};

// An extension produced a drawing that is not simple. For the
// crossing-minimizing extension this means the input was not
// crossing-minimizing.
class NotSimpleError : public Error {
 public:
  using Error::Error;
};

// An internal consistency check failed. Always a bug.
class InvariantError : public Error {
 public:
  using Error::Error;
};

}  // namespace sepdraw

#endif  // SEPDRAW_ERRORS_HPP_
