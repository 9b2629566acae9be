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

#include "addmds/gf.hpp"

#include <algorithm>
#include <numeric>

#include "addmds/matrix.hpp"

namespace addmds {

std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::NotPrime: return "NotPrime";
        case ErrorKind::TowerTooLarge: return "TowerTooLarge";
        case ErrorKind::DivisionByZero: return "DivisionByZero";
        case ErrorKind::TowerMismatch: return "TowerMismatch";
        case ErrorKind::InvalidSubfield: return "InvalidSubfield";
        case ErrorKind::NotInvertible: return "NotInvertible";
        case ErrorKind::ZeroScalar: return "ZeroScalar";
        case ErrorKind::BadDimension: return "BadDimension";
        case ErrorKind::BudgetExceeded: return "BudgetExceeded";
        case ErrorKind::NotMds: return "NotMds";
        case ErrorKind::NonInvertibleMap: return "NonInvertibleMap";
        case ErrorKind::DimensionMismatch: return "DimensionMismatch";
        case ErrorKind::BadShape: return "BadShape";
        case ErrorKind::BadIndex: return "BadIndex";
        case ErrorKind::SpanFailure: return "SpanFailure";
        case ErrorKind::FieldTooSmall: return "FieldTooSmall";
        case ErrorKind::InvalidArgument: return "InvalidArgument";
        case ErrorKind::Parse: return "Parse";
    }
    return "Unknown";
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

namespace {

// Polynomials over F_p, little-endian, no trailing zeros (zero polynomial is empty).
using Poly = std::vector<unsigned>;

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

unsigned inv_mod(unsigned a, unsigned p) {
    // p is prime, Fermat
    std::uint64_t r = 1, b = a % p;
    for (unsigned e = p - 2; e; e >>= 1) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
    }
    return static_cast<unsigned>(r);
}

Poly poly_mod(Poly a, const Poly& m, unsigned p) {
    trim(a);
    const std::size_t dm = m.size() - 1;
    const unsigned lead_inv = inv_mod(m.back(), p);
    while (a.size() > dm) {
        const std::size_t shift = a.size() - 1 - dm;
        const unsigned factor = static_cast<unsigned>(std::uint64_t{a.back()} * lead_inv % p);
        for (std::size_t i = 0; i <= dm; ++i) {
            a[shift + i] = static_cast<unsigned>((a[shift + i] + std::uint64_t{p - factor} * m[i]) % p);
        }
        trim(a);
    }
    return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& m, unsigned p) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = static_cast<unsigned>((r[i + j] + std::uint64_t{a[i]} * b[j]) % p);
    return poly_mod(std::move(r), m, p);
}

Poly poly_powmod(Poly base, std::uint64_t n, const Poly& m, unsigned p) {
    Poly r{1};
    base = poly_mod(std::move(base), m, p);
    while (n) {
        if (n & 1) r = poly_mulmod(r, base, m, p);
        base = poly_mulmod(base, base, m, p);
        n >>= 1;
    }
    return r;
}

Poly poly_sub(Poly a, const Poly& b, unsigned p) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i]) % p;
    trim(a);
    return a;
}

Poly poly_gcd(Poly a, Poly b, unsigned p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly r = poly_mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

// Rabin's test: x^{p^d} = x mod f and gcd(x^{p^{d/r}} - x, f) = 1 for primes r | d.
bool is_irreducible(const Poly& f, unsigned p) {
    const unsigned d = static_cast<unsigned>(f.size() - 1);
    if (d == 1) return true;
    const Poly x{0, 1};
    auto x_pow_p_pow = [&](unsigned k) {
        Poly r = x;
        for (unsigned i = 0; i < k; ++i) r = poly_powmod(r, p, f, p);
        return r;
    };
    if (poly_sub(x_pow_p_pow(d), x, p) != Poly{}) return false;
    for (auto r : prime_factors(d)) {
        Poly g = poly_gcd(f, poly_sub(x_pow_p_pow(d / static_cast<unsigned>(r)), x, p), p);
        if (g.size() != 1) return false;
    }
    return true;
}

}  // namespace

FieldTower::FieldTower(unsigned p, unsigned e, unsigned h) : p_(p), e_(e), h_(h) {}

TowerPtr FieldTower::create(unsigned p, unsigned e, unsigned h, std::size_t max_size) {
    if (!is_prime(p)) throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
    if (e == 0 || h == 0) throw Error(ErrorKind::InvalidArgument, "e and h must be positive");
    const unsigned deg = e * h;
    std::uint64_t size = 1;
    for (unsigned i = 0; i < deg; ++i) {
        size *= p;
        if (size > max_size || size > (std::uint64_t{1} << 31))
            throw Error(ErrorKind::TowerTooLarge, "p^(e*h) exceeds " + std::to_string(max_size));
    }
    if (size < 2) throw Error(ErrorKind::InvalidArgument, "empty tower");

    std::shared_ptr<FieldTower> t(new FieldTower(p, e, h));
    t->size_ = static_cast<std::size_t>(size);
    t->order_ = static_cast<std::uint32_t>(size - 1);
    t->q_ = 1;
    for (unsigned i = 0; i < e; ++i) t->q_ *= p;
    t->pow_p_.resize(deg + 1);
    t->pow_p_[0] = 1;
    for (unsigned i = 1; i <= deg; ++i) t->pow_p_[i] = t->pow_p_[i - 1] * p;

    // Smallest monic irreducible: lower coefficients enumerated as a base-p
    // counter whose most significant digit is the X^{deg-1} coefficient.
    Poly f;
    for (std::uint64_t v = 0; v < size; ++v) {
        Poly cand(deg + 1, 0);
        std::uint64_t w = v;
        for (unsigned i = 0; i < deg; ++i) {
            cand[i] = static_cast<unsigned>(w % p);
            w /= p;
        }
        cand[deg] = 1;
        if (cand[0] == 0 && deg > 1) continue;
        if (is_irreducible(cand, p)) {
            f = cand;
            break;
        }
    }
    t->modulus_ = f;

    auto to_poly = [&](std::uint64_t x) {
        Poly r(deg, 0);
        for (unsigned i = 0; i < deg; ++i) {
            r[i] = static_cast<unsigned>(x % p);
            x /= p;
        }
        trim(r);
        return r;
    };
    auto from_poly = [&](const Poly& a) {
        std::uint64_t x = 0;
        for (std::size_t i = a.size(); i-- > 0;) x = x * p + a[i];
        return static_cast<Elem>(x);
    };

    const std::uint64_t order = size - 1;
    const auto factors = prime_factors(order);
    Elem omega = 0;
    for (std::uint64_t x = 1; x < size; ++x) {
        const Poly px = to_poly(x);
        bool primitive = poly_powmod(px, order, f, p) == Poly{1};
        for (auto r : factors) {
            if (!primitive) break;
            if (poly_powmod(px, order / r, f, p) == Poly{1}) primitive = false;
        }
        if (primitive) {
            omega = static_cast<Elem>(x);
            break;
        }
    }
    t->omega_ = omega;

    // Multiplication by omega as an F_p-linear map on digit vectors.
    std::vector<std::vector<unsigned>> images(deg);
    for (unsigned i = 0; i < deg; ++i) {
        Poly xi(i + 1, 0);
        xi[i] = 1;
        Poly img = poly_mulmod(xi, to_poly(omega), f, p);
        img.resize(deg, 0);
        images[i] = img;
    }
    t->exp_.assign(2 * order, 0);
    t->log_.assign(size, 0);
    std::vector<unsigned> cur(deg, 0), next(deg);
    cur[0] = 1;
    for (std::uint64_t i = 0; i < order; ++i) {
        const Elem packed = from_poly(cur);
        t->exp_[i] = t->exp_[i + order] = packed;
        t->log_[packed] = static_cast<std::uint32_t>(i);
        std::fill(next.begin(), next.end(), 0u);
        for (unsigned a = 0; a < deg; ++a) {
            if (!cur[a]) continue;
            for (unsigned b = 0; b < deg; ++b)
                next[b] = static_cast<unsigned>((next[b] + std::uint64_t{cur[a]} * images[a][b]) % p);
        }
        std::swap(cur, next);
    }

    t->qpow_mod_.resize(h);
    std::uint64_t qp = 1;
    for (unsigned i = 0; i < h; ++i) {
        t->qpow_mod_[i] = qp % order;
        qp = (qp * (t->q_ % order)) % order;
    }
    if (order == 1) std::fill(t->qpow_mod_.begin(), t->qpow_mod_.end(), 0);

    t->neg_.resize(size);
    for (std::uint64_t x = 0; x < size; ++x) {
        std::uint64_t r = 0, w = x;
        for (unsigned i = 0; i < deg; ++i) {
            const unsigned d = static_cast<unsigned>(w % p);
            w /= p;
            r += std::uint64_t{(p - d) % p} * t->pow_p_[i];
        }
        t->neg_[x] = static_cast<Elem>(r);
    }
    if (p != 2 && size <= 1024) {
        t->add_table_.resize(size * size);
        for (std::uint64_t x = 0; x < size; ++x)
            for (std::uint64_t y = 0; y < size; ++y) {
                std::uint64_t r = 0, a = x, b = y;
                for (unsigned i = 0; i < deg; ++i) {
                    r += ((a % p + b % p) % p) * t->pow_p_[i];
                    a /= p;
                    b /= p;
                }
                t->add_table_[x * size + y] = static_cast<Elem>(r);
            }
    }

    // F_q = {0} ∪ <omega^{(q^h-1)/(q-1)}>
    const std::uint64_t step = order / (t->q_ - 1);
    t->base_.push_back(0);
    for (std::uint64_t i = 0; i < t->q_ - 1; ++i) t->base_.push_back(t->exp_[i * step]);
    std::sort(t->base_.begin(), t->base_.end());
    t->base_pos_.assign(size, -1);
    for (std::size_t i = 0; i < t->base_.size(); ++i) t->base_pos_[t->base_[i]] = static_cast<std::int32_t>(i);

    // Trace-dual basis of 1, omega, ..., omega^{h-1}.
    Matrix gram(h, h);
    for (unsigned l = 0; l < h; ++l)
        for (unsigned m = 0; m < h; ++m) gram(l, m) = t->trace(t->omega_pow(l + m));
    auto gram_inv = inverse(*t, gram);
    t->dual_.assign(h, 0);
    for (unsigned l = 0; l < h; ++l)
        for (unsigned m = 0; m < h; ++m)
            t->dual_[l] = t->add(t->dual_[l], t->mul((*gram_inv)(l, m), t->omega_pow(m)));
    return t;
}

Elem FieldTower::add(Elem x, Elem y) const {
    if (p_ == 2) return x ^ y;
    if (!add_table_.empty()) return add_table_[std::size_t{x} * size_ + y];
    std::uint64_t r = 0;
    for (unsigned i = 0; i < degree(); ++i) {
        r += ((x % p_ + y % p_) % p_) * std::uint64_t{pow_p_[i]};
        x /= p_;
        y /= p_;
    }
    return static_cast<Elem>(r);
}

Elem FieldTower::sub(Elem x, Elem y) const { return add(x, neg_[y]); }

Elem FieldTower::neg(Elem x) const { return neg_[x]; }

Elem FieldTower::inv(Elem x) const {
    if (x == 0) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
    return exp_[(order_ - log_[x]) % order_];
}

Elem FieldTower::pow(Elem x, std::uint64_t n) const {
    if (n == 0) return 1;
    if (x == 0) return 0;
    return exp_[(static_cast<unsigned __int128>(log_[x]) * n) % order_];
}

std::uint32_t FieldTower::log(Elem x) const {
    if (x == 0) throw Error(ErrorKind::DivisionByZero, "log of zero");
    return log_[x];
}

bool FieldTower::in_subfield(Elem x, unsigned s) const {
    if (s == 0 || h_ % s != 0)
        throw Error(ErrorKind::InvalidSubfield, "s=" + std::to_string(s) + " does not divide h=" + std::to_string(h_));
    return frob_pow(x, s) == x;
}

unsigned FieldTower::subfield_degree(Elem x) const {
    for (unsigned s = 1; s <= h_; ++s)
        if (h_ % s == 0 && frob_pow(x, s) == x) return s;
    return h_;
}

unsigned FieldTower::base_index(Elem x) const {
    const auto pos = base_pos_.at(x);
    if (pos < 0) throw Error(ErrorKind::InvalidArgument, "element is not in F_q");
    return static_cast<unsigned>(pos);
}

Elem FieldTower::trace(Elem x) const {
    Elem r = 0;
    for (unsigned i = 0; i < h_; ++i) r = add(r, frob_pow(x, i));
    return r;
}

void FieldTower::build_coord_table() const {
    std::call_once(coord_once_, [this] {
        coord_table_.assign(size_ * h_, 0);
        const std::size_t q = base_.size();
        std::vector<std::uint32_t> digit(h_, 0);
        std::vector<Elem> basis(h_);
        for (unsigned i = 0; i < h_; ++i) basis[i] = omega_pow(i);
        for (std::size_t count = 0; count < size_; ++count) {
            Elem x = 0;
            for (unsigned i = 0; i < h_; ++i)
                if (digit[i]) x = add(x, mul(base_[digit[i]], basis[i]));
            std::copy(digit.begin(), digit.end(), coord_table_.begin() + static_cast<std::ptrdiff_t>(std::size_t{x} * h_));
            for (unsigned i = 0; i < h_; ++i) {
                if (++digit[i] < q) break;
                digit[i] = 0;
            }
        }
    });
}

std::vector<Elem> FieldTower::coords(Elem x) const {
    build_coord_table();
    std::vector<Elem> out(h_);
    for (unsigned i = 0; i < h_; ++i) out[i] = base_[coord_table_[std::size_t{x} * h_ + i]];
    return out;
}

void FieldTower::coord_indices(Elem x, std::span<std::uint32_t> out) const {
    build_coord_table();
    std::copy_n(coord_table_.begin() + static_cast<std::ptrdiff_t>(std::size_t{x} * h_), h_, out.begin());
}

Elem FieldTower::from_coords(std::span<const Elem> c) const {
    if (c.size() != h_) throw Error(ErrorKind::DimensionMismatch, "coordinate vector length");
    Elem x = 0;
    for (unsigned i = 0; i < h_; ++i) x = add(x, mul(c[i], omega_pow(i)));
    return x;
}

std::vector<unsigned> FieldTower::to_digits(Elem x) const {
    std::vector<unsigned> d(degree());
    for (unsigned i = 0; i < degree(); ++i) {
        d[i] = x % p_;
        x /= p_;
    }
    return d;
}

Elem FieldTower::from_digits(std::span<const unsigned> digits) const {
    if (digits.size() != degree())
        throw Error(ErrorKind::DimensionMismatch,
                    "element needs " + std::to_string(degree()) + " digits, got " + std::to_string(digits.size()));
    std::uint64_t x = 0;
    for (std::size_t i = digits.size(); i-- > 0;) {
        if (digits[i] >= p_) throw Error(ErrorKind::InvalidArgument, "digit out of range");
        x = x * p_ + digits[i];
    }
    return static_cast<Elem>(x);
}

void require_same_tower(const FieldTower& a, const FieldTower& b) {
    if (!a.same_as(b)) throw Error(ErrorKind::TowerMismatch, "operands live in different towers");
}

CoordinateBasis::CoordinateBasis(TowerPtr tower, std::vector<Elem> basis)
    : tower_(std::move(tower)), basis_(std::move(basis)) {
    const unsigned h = tower_->h();
    if (basis_.size() != h) throw Error(ErrorKind::DimensionMismatch, "basis must have h elements");
    Matrix b(h, h);
    for (unsigned l = 0; l < h; ++l) {
        const auto c = tower_->coords(basis_[l]);
        for (unsigned m = 0; m < h; ++m) b(l, m) = c[m];
    }
    auto bi = inverse(*tower_, b);
    if (!bi) throw Error(ErrorKind::InvalidArgument, "elements are not an F_q-basis");
    to_omega_inverse_.assign(h, std::vector<Elem>(h));
    for (unsigned l = 0; l < h; ++l)
        for (unsigned m = 0; m < h; ++m) to_omega_inverse_[l][m] = (*bi)(l, m);
}

CoordinateBasis CoordinateBasis::omega_basis(TowerPtr tower) {
    std::vector<Elem> b(tower->h());
    for (unsigned i = 0; i < tower->h(); ++i) b[i] = tower->omega_pow(i);
    return CoordinateBasis(std::move(tower), std::move(b));
}

std::vector<Elem> CoordinateBasis::coords(Elem x) const {
    // x = d * basis, omega-coords c = d * B, so d = c * B^{-1}
    const auto c = tower_->coords(x);
    const unsigned h = tower_->h();
    std::vector<Elem> d(h, 0);
    for (unsigned m = 0; m < h; ++m)
        for (unsigned l = 0; l < h; ++l) d[m] = tower_->add(d[m], tower_->mul(c[l], to_omega_inverse_[l][m]));
    return d;
}

Elem CoordinateBasis::combine(std::span<const Elem> c) const {
    Elem x = 0;
    for (std::size_t i = 0; i < basis_.size(); ++i) x = tower_->add(x, tower_->mul(c[i], basis_[i]));
    return x;
}

}  // namespace addmds
