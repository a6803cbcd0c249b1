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

#include "reference.hpp"

namespace gge::cli::reference {

ChainForms ghz_forms(double) { return {1.0, 2.0 / 3.0, 2.0 / 3.0}; }

ChainForms epr_forms(double n) {
    return {1.0, (n - 2.0) / (2.0 * (n - 1.0)), (2.0 * n - 1.0) * (n - 2.0) / (2.0 * (n - 1.0) * (n - 1.0))};
}

ChainForms w_forms(double n) {
    const double pair = 16.0 * (n - 2.0) / (3.0 * n * n);
    return {4.0 * (n - 1.0) / (n * n), pair, pair};
}

}  // namespace gge::cli::reference
