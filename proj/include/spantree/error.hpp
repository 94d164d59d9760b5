// Copyright 2026 The Authors.
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

#ifndef SPANTREE_ERROR_HPP_
#define SPANTREE_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace spantree {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Invalid vertex index, non-positive weight, self-loop.
class GraphError : public Error {
 public:
  using Error::Error;
};

// A Laplacian minor could not be factored (disconnected graph or extreme
// conditioning).
class SingularMinorError : public Error {
 public:
  using Error::Error;
};

// Parameter outside its documented range.
class DomainError : public Error {
 public:
  using Error::Error;
};

// An exact oracle refused an instance that exceeds its size guard.
class InstanceTooLargeError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(int line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

}  // namespace spantree

#endif  // SPANTREE_ERROR_HPP_
