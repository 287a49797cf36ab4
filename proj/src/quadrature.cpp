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

#include "pointerlab/quadrature.hpp"

namespace pointerlab::detail {

const CircleTable& circle_table() {
    static const CircleTable table = [] {
        CircleTable t;
        t.cos.resize(kCircleNodes);
        t.sin.resize(kCircleNodes);
        const double step = 2.0 * std::numbers::pi / static_cast<double>(kCircleNodes);
        for (std::size_t k = 0; k < kCircleNodes; ++k) {
            const double phi = step * static_cast<double>(k);
            t.cos[k] = std::cos(phi);
            t.sin[k] = std::sin(phi);
        }
        return t;
    }();
    return table;
}

}  // namespace pointerlab::detail
