// Copyright 2026 The gtc Authors
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

namespace gtc {

// Invalid family parameters or command arguments.
class ParamError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Malformed serialized input or an unknown format name.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A search ran past its configured budget. Raised instead of returning an
// unverified answer.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A cycle, permutation or template failed validation against its host graph.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace gtc
