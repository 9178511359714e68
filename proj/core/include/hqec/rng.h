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

#pragma once

#include <cstddef>
#include <cstdint>
#include <deque>
#include <random>
#include <span>

namespace hqec {

/// Deterministic generator: the same seed yields the same sequence on every
/// platform. Only the raw engine output is used; no std distributions.
class Rng {
   public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {
    }

    std::uint64_t next_u64() {
        return engine_();
    }
    /// Uniform double in [0, 1) with 53 random bits.
    double uniform() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }
    bool bit() {
        return engine_() >> 63;
    }

   private:
    std::mt19937_64 engine_;
};

/// Supplies measurement outcomes: either sampled from a seeded Rng or taken
/// from a queue of forced outcomes (a test hook). Forced outcomes are used
/// first; once the queue is empty the source samples (or throws if it has no
/// generator).
class MeasurementSource {
   public:
    explicit MeasurementSource(Rng& rng) : rng_(&rng) {
    }
    explicit MeasurementSource(std::deque<std::size_t> forced, Rng* fallback = nullptr)
        : rng_(fallback), forced_(std::move(forced)) {
    }

    struct Choice {
        std::size_t index;
        bool forced;
    };

    /// Picks an index with the given probabilities (which must sum to ~1).
    /// A forced index with probability below 1e-20 throws std::runtime_error.
    Choice choose(std::span<const double> probabilities);

    std::size_t forced_remaining() const {
        return forced_.size();
    }

   private:
    Rng* rng_ = nullptr;
    std::deque<std::size_t> forced_;
};

}  // namespace hqec
