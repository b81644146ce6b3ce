//  Copyright 2026 The Skula Authors
//
//  Licensed under the Apache License, Version 2.0 (the "License");
//  you may not use this file except in compliance with the License.
//  You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
//  Unless required by applicable law or agreed to in writing, software
//  distributed under the License is distributed on an "AS IS" BASIS,
//  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//  See the License for the specific language governing permissions and
//  limitations under the License.

#ifndef SKULA_ERROR_HPP_
#define SKULA_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace skula {

// Rejected input: malformed text, violated precondition, unsupported case.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

// An enumeration would exceed its configured size bound.
class BoundError : public Error {
 public:
  using Error::Error;
};

}  // namespace skula

#endif  // SKULA_ERROR_HPP_
