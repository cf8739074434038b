// Copyright 2026 The qsym Authors
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

namespace qsym {

// Base class for every error raised by the library. The CLI maps all of
// these to exit code 2.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Operand sizes disagree (permutation vs graph, word widths, ...).
class DimensionError : public Error {
 public:
  using Error::Error;
};

// A configured size bound was exceeded.
class CapacityError : public Error {
 public:
  using Error::Error;
};

// Precondition violated by the caller.
class UsageError : public Error {
 public:
  using Error::Error;
};

// Malformed external input (JSON files, edge lists).
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace qsym
