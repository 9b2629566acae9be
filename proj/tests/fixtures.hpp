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

#include <numeric>
#include <random>
#include <stdexcept>

#include "addmds/code.hpp"
#include "oracles.hpp"

namespace fixture {

// Linear [n, k] MDS code: n distinct columns of the extended Reed-Solomon
// generator, mixed by a random invertible F_{q^h} row transform.
inline addmds::AdditiveCode random_linear_mds(const addmds::TowerPtr& t, std::size_t k, std::size_t n,
                                              std::mt19937_64& rng) {
    using namespace addmds;
    const std::size_t big = t->size();
    if (n > big + 1) throw std::invalid_argument("random_linear_mds: n > q^h + 1");
    std::vector<std::size_t> cols(big + 1);
    std::iota(cols.begin(), cols.end(), 0);
    std::shuffle(cols.begin(), cols.end(), rng);
    cols.resize(n);
    Matrix g(k, n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t r = 0; r < k; ++r)
            g(r, j) = cols[j] == big ? (r + 1 == k ? 1 : 0) : t->pow(static_cast<Elem>(cols[j]), r);
    while (true) {
        Matrix mix(k, k);
        for (std::size_t r = 0; r < k; ++r)
            for (std::size_t c = 0; c < k; ++c) mix(r, c) = static_cast<Elem>(rng() % big);
        if (determinant(*t, mix) != 0) return code_from_linear_generator(t, mat_mul(*t, mix, g));
    }
}

inline addmds::EquivalenceMove random_move(const addmds::TowerPtr& t, std::size_t n, std::mt19937_64& rng,
                                           bool permute = true) {
    addmds::EquivalenceMove m;
    m.perm.resize(n);
    std::iota(m.perm.begin(), m.perm.end(), 0);
    if (permute) std::shuffle(m.perm.begin(), m.perm.end(), rng);
    for (std::size_t j = 0; j < n; ++j) m.maps.push_back(oracle::random_invertible(t, rng));
    return m;
}

}  // namespace fixture
