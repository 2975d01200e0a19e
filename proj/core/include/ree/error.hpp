// Copyright 2026 The Ree Workbench Authors
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

#ifndef REE_ERROR_HPP_
#define REE_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace ree {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A computation exceeded one of its hard size or node caps.
class ResourceError : public Error {
 public:
  using Error::Error;
};

// Bad input: malformed text, mismatched operands, violated preconditions.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// A result that should be impossible by construction failed its self-check.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace ree

#endif  // REE_ERROR_HPP_
