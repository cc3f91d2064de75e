// Copyright 2026 The u18root Authors
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

namespace u18 {

// Malformed or out-of-range caller input (bad decimal text, zero where a
// positive value is required).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Well-formed input that violates a mathematical precondition, e.g. asking
// for the residue class of a number divisible by 3.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// An engine invariant was broken. Never expected to fire.
class InternalFault : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace u18
