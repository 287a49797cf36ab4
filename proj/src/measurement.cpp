// Copyright 2026 The pointerlab Authors
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

#include "pointerlab/measurement.hpp"

namespace pointerlab {

std::string_view to_string(Geometry g) {
    switch (g) {
        case Geometry::Continuous:
            return "continuous";
        case Geometry::Orthogonal90:
            return "trotter90";
        case Geometry::Diagonal45:
            return "trotter45";
    }
    return "unknown";
}

}  // namespace pointerlab
