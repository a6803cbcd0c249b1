// Copyright 2026 The gge Authors
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

namespace gge {

// Input that is structurally wrong: unknown names, bad indices, malformed files.
using InvalidArgument = std::invalid_argument;

// A value that parsed fine but breaks a physical invariant (norm, trace, PSD).
class InvariantViolation : public std::runtime_error {
  public:
    explicit InvariantViolation(const std::string &what) : std::runtime_error(what) {}
};

// Quadrature or iterative solver failed to reach the requested accuracy.
class NumericalError : public std::runtime_error {
  public:
    explicit NumericalError(const std::string &what) : std::runtime_error(what) {}
};

}  // namespace gge
