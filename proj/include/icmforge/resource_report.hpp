// Copyright 2026 The icmforge Authors
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

#include <cstddef>

namespace icmforge {

struct ResourceReport {
    std::size_t ancillae = 0;
    std::size_t cnots = 0;
    std::size_t czs = 0;
    std::size_t hs = 0;
    std::size_t measurements = 0;
    std::size_t clifford_depth = 0;
    std::size_t measurement_depth = 0;

    bool operator==(const ResourceReport&) const = default;

    /// Field-wise sum of the tallies; depth fields are left at zero.
    ResourceReport& operator+=(const ResourceReport& other) {
        ancillae += other.ancillae;
        cnots += other.cnots;
        czs += other.czs;
        hs += other.hs;
        measurements += other.measurements;
        clifford_depth = 0;
        measurement_depth = 0;
        return *this;
    }
    friend ResourceReport operator+(ResourceReport a, const ResourceReport& b) { return a += b; }
    ResourceReport operator*(std::size_t k) const {
        ResourceReport r = *this;
        r.ancillae *= k;
        r.cnots *= k;
        r.czs *= k;
        r.hs *= k;
        r.measurements *= k;
        r.clifford_depth = 0;
        r.measurement_depth = 0;
        return r;
    }
};

}  // namespace icmforge
