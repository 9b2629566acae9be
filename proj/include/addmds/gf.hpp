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
#include <memory>
#include <mutex>
#include <span>
#include <vector>

#include "addmds/error.hpp"

namespace addmds {

/// Field element of a tower, stored as its packed digit vector: the element
/// sum_i c_i X^i (c_i in [0,p)) is encoded as sum_i c_i p^i. Zero is 0, one is 1.
using Elem = std::uint32_t;

class FieldTower;
using TowerPtr = std::shared_ptr<const FieldTower>;

/// F_p ⊆ F_q ⊆ F_{q^h} with q = p^e, realized as F_p[X]/(modulus) of degree e*h.
///
/// The modulus is the lexicographically smallest monic irreducible polynomial
/// of degree e*h (compared as base-p numbers, leading coefficients most
/// significant) and omega is the smallest primitive element under the same
/// ordering of packed digits. Both choices are reproducible.
///
/// Immutable after construction; all members are safe for concurrent reads.
class FieldTower {
public:
    static constexpr std::size_t kDefaultMaxSize = std::size_t{1} << 20;

    static TowerPtr create(unsigned p, unsigned e, unsigned h,
                           std::size_t max_size = kDefaultMaxSize);

    unsigned p() const noexcept { return p_; }
    unsigned e() const noexcept { return e_; }
    unsigned h() const noexcept { return h_; }
    unsigned degree() const noexcept { return e_ * h_; }
    std::uint64_t q() const noexcept { return q_; }
    std::size_t size() const noexcept { return size_; }

    /// Coefficients c_0..c_{eh} of the monic modulus, little-endian.
    const std::vector<unsigned>& modulus() const noexcept { return modulus_; }
    Elem omega() const noexcept { return omega_; }

    bool same_as(const FieldTower& other) const noexcept {
        return p_ == other.p_ && e_ == other.e_ && h_ == other.h_;
    }

    Elem add(Elem x, Elem y) const;
    Elem sub(Elem x, Elem y) const;
    Elem neg(Elem x) const;
    Elem mul(Elem x, Elem y) const {
        if (x == 0 || y == 0) return 0;
        return exp_[log_[x] + log_[y]];
    }
    Elem inv(Elem x) const;
    Elem div(Elem x, Elem y) const { return mul(x, inv(y)); }
    Elem pow(Elem x, std::uint64_t n) const;
    /// x^q
    Elem frobenius(Elem x) const { return frob_pow(x, 1); }
    /// x^{q^i}, i taken modulo h
    Elem frob_pow(Elem x, unsigned i) const {
        if (x == 0) return 0;
        return exp_[(static_cast<std::uint64_t>(log_[x]) * qpow_mod_[i % h_]) % order_];
    }

    /// Discrete logarithm base omega; x must be non-zero.
    std::uint32_t log(Elem x) const;
    Elem omega_pow(std::uint64_t n) const { return exp_[n % order_]; }

    /// True iff x lies in F_{q^s}; requires s | h.
    bool in_subfield(Elem x, unsigned s) const;
    /// Smallest s with x in F_{q^s} (s divides h).
    unsigned subfield_degree(Elem x) const;

    /// Elements of F_q in increasing packed order; index 0 is 0 and index 1 is 1.
    const std::vector<Elem>& base_field() const noexcept { return base_; }
    /// Position of x inside base_field(); throws if x is not in F_q.
    unsigned base_index(Elem x) const;
    bool in_base(Elem x) const { return base_pos_[x] >= 0; }

    /// (c_0, ..., c_{h-1}) in F_q with x = sum c_i omega^i.
    std::vector<Elem> coords(Elem x) const;
    /// Same as coords but as indices into base_field().
    void coord_indices(Elem x, std::span<std::uint32_t> out) const;
    Elem from_coords(std::span<const Elem> c) const;

    /// Basis theta_0..theta_{h-1} with Tr(theta_l omega^m) = [l == m].
    const std::vector<Elem>& dual_basis() const noexcept { return dual_; }
    /// Absolute trace F_{q^h} -> F_q.
    Elem trace(Elem x) const;

    std::vector<unsigned> to_digits(Elem x) const;
    Elem from_digits(std::span<const unsigned> digits) const;

private:
    FieldTower(unsigned p, unsigned e, unsigned h);
    void build_coord_table() const;

    unsigned p_, e_, h_;
    std::uint64_t q_;
    std::size_t size_;
    std::uint32_t order_;  // size - 1
    std::vector<unsigned> modulus_;
    Elem omega_ = 0;

    std::vector<Elem> exp_;             // length 2*order so log sums need no reduction
    std::vector<std::uint32_t> log_;
    std::vector<std::uint64_t> qpow_mod_;
    std::vector<Elem> add_table_;       // size^2 entries when the field is small
    std::vector<Elem> neg_;
    std::vector<std::uint32_t> pow_p_;  // p^i

    std::vector<Elem> base_;
    std::vector<std::int32_t> base_pos_;
    std::vector<Elem> dual_;

    mutable std::once_flag coord_once_;
    mutable std::vector<std::uint32_t> coord_table_;  // size * h base indices
};

void require_same_tower(const FieldTower& a, const FieldTower& b);

/// Coordinates with respect to an arbitrary F_q-basis of F_{q^h}.
class CoordinateBasis {
public:
    CoordinateBasis(TowerPtr tower, std::vector<Elem> basis);

    static CoordinateBasis omega_basis(TowerPtr tower);

    const std::vector<Elem>& basis() const noexcept { return basis_; }
    /// Coordinates as F_q elements.
    std::vector<Elem> coords(Elem x) const;
    Elem combine(std::span<const Elem> c) const;

private:
    TowerPtr tower_;
    std::vector<Elem> basis_;
    std::vector<std::vector<Elem>> to_omega_inverse_;  // h x h over F_q
};

bool is_prime(std::uint64_t n);
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

}  // namespace addmds
