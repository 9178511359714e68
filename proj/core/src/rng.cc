// Copyright 2026 The hqec Authors
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

#include "hqec/rng.h"

#include <stdexcept>
#include <string>

namespace hqec {

MeasurementSource::Choice MeasurementSource::choose(std::span<const double> probabilities) {
    if (!forced_.empty()) {
        std::size_t idx = forced_.front();
        forced_.pop_front();
        if (idx >= probabilities.size() || probabilities[idx] < 1e-20) {
            throw std::runtime_error("forced measurement outcome " + std::to_string(idx) + " has zero probability");
        }
        return {idx, true};
    }
    if (rng_ == nullptr) {
        throw std::runtime_error("forced outcomes exhausted and no generator to sample from");
    }
    double r = rng_->uniform();
    double acc = 0;
    std::size_t last_nonzero = 0;
    for (std::size_t i = 0; i < probabilities.size(); ++i) {
        if (probabilities[i] <= 0) {
            continue;
        }
        last_nonzero = i;
        acc += probabilities[i];
        if (r < acc) {
            return {i, false};
        }
    }
    return {last_nonzero, false};
}

}  // namespace hqec
