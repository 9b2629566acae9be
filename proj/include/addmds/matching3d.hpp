/**************************************************************************
 * Copyright 2026 The addmds Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 **************************************************************************/

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace addmds {

/// A hyperedge (x, y, z) over coordinates drawn from [0, domain).
struct Triple3 {
    std::uint32_t x, y, z;
};

struct MatchingResult {
    std::vector<std::size_t> chosen;  // indices into the input, increasing
    std::uint64_t nodes = 0;
};

/// Exact maximum 3-dimensional matching (triples pairwise distinct in every
/// coordinate) by branch and bound over the y-values.
///
/// `forced` puts one triple into every candidate solution. The search stops
/// as soon as a matching of size `target` is found (0 means no target) and
/// only reports matchings strictly larger than `at_least - 1`; if nothing of
/// that size exists, `chosen` is empty. Throws BudgetExceeded after
/// `node_budget` search nodes. domain must not exceed 256.
MatchingResult max_3d_matching(std::span<const Triple3> triples, std::size_t domain,
                               std::optional<std::size_t> forced = std::nullopt, std::size_t target = 0,
                               std::size_t at_least = 0, std::uint64_t node_budget = 50'000'000);

}  // namespace addmds
