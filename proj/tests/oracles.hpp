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

// Slow reference implementations used as test oracles. Nothing here calls
// into the table-driven arithmetic except where noted.

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "addmds/code.hpp"
#include "addmds/gf.hpp"
#include "addmds/linpoly.hpp"

namespace oracle {

using Poly = std::vector<unsigned>;  // little-endian coefficients mod p

inline void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo monic-or-not b over F_p.
inline Poly poly_mod(Poly a, const Poly& b, unsigned p) {
    trim(a);
    const unsigned lead = b.back();
    unsigned inv = 1;
    while ((inv * lead) % p != 1) ++inv;
    while (a.size() >= b.size()) {
        const unsigned f = (a.back() * inv) % p;
        const std::size_t s = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[s + i] = (a[s + i] + p * p - f * b[i] % p) % p;
        trim(a);
    }
    return a;
}

inline Poly poly_mul(const Poly& a, const Poly& b, unsigned p) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    trim(r);
    return r;
}

inline Poly digits_of(std::uint64_t n, unsigned p, unsigned len) {
    Poly d(len, 0);
    for (unsigned i = 0; i < len; ++i) {
        d[i] = static_cast<unsigned>(n % p);
        n /= p;
    }
    return d;
}

// Trial division by every monic polynomial of degree 1..d/2.
inline bool irreducible(const Poly& m, unsigned p) {
    const unsigned d = static_cast<unsigned>(m.size() - 1);
    for (unsigned e = 1; 2 * e <= d; ++e) {
        std::uint64_t count = 1;
        for (unsigned i = 0; i < e; ++i) count *= p;
        for (std::uint64_t n = 0; n < count; ++n) {
            Poly div = digits_of(n, p, e);
            div.push_back(1);
            if (poly_mod(m, div, p).empty()) return false;
        }
    }
    return true;
}

// First monic irreducible of degree d with the lower coefficients read as a
// base-p number (c_{d-1} most significant).
inline Poly first_irreducible(unsigned p, unsigned d) {
    std::uint64_t count = 1;
    for (unsigned i = 0; i < d; ++i) count *= p;
    for (std::uint64_t n = 0; n < count; ++n) {
        Poly m = digits_of(n, p, d);
        m.push_back(1);
        if (irreducible(m, p)) return m;
    }
    return {};
}

// Field arithmetic on packed elements by schoolbook multiplication.
struct NaiveField {
    unsigned p, d;
    Poly modulus;
    std::uint64_t size;

    NaiveField(unsigned p_, unsigned d_) : p(p_), d(d_), modulus(first_irreducible(p_, d_)) {
        size = 1;
        for (unsigned i = 0; i < d; ++i) size *= p;
    }
    Poly unpack(std::uint32_t x) const { return digits_of(x, p, d); }
    std::uint32_t pack(Poly a) const {
        a.resize(d, 0);
        std::uint32_t r = 0;
        for (unsigned i = d; i-- > 0;) r = r * p + a[i];
        return r;
    }
    std::uint32_t add(std::uint32_t x, std::uint32_t y) const {
        auto a = unpack(x), b = unpack(y);
        for (unsigned i = 0; i < d; ++i) a[i] = (a[i] + b[i]) % p;
        return pack(a);
    }
    std::uint32_t mul(std::uint32_t x, std::uint32_t y) const {
        return pack(poly_mod(poly_mul(unpack(x), unpack(y), p), modulus, p));
    }
    std::uint32_t pow(std::uint32_t x, std::uint64_t n) const {
        std::uint32_t r = 1;
        for (std::uint64_t i = 0; i < n; ++i) r = mul(r, x);
        return r;
    }
    std::uint64_t order(std::uint32_t x) const {
        std::uint32_t y = x;
        std::uint64_t k = 1;
        while (y != 1) {
            y = mul(y, x);
            ++k;
        }
        return k;
    }
};

// Evaluation table of f over the whole field, with x^{q^i} by plain powering.
inline std::vector<addmds::Elem> table(const addmds::LinPoly& f) {
    const auto& t = *f.tower();
    std::vector<std::uint64_t> qi(f.h(), 1);
    for (unsigned i = 1; i < f.h(); ++i) qi[i] = qi[i - 1] * t.q();
    std::vector<addmds::Elem> out(t.size());
    for (addmds::Elem x = 0; x < t.size(); ++x) {
        addmds::Elem r = 0;
        for (unsigned i = 0; i < f.h(); ++i) r = t.add(r, t.mul(f.coeff(i), t.pow(x, qi[i])));
        out[x] = r;
    }
    return out;
}

inline bool injective(const std::vector<addmds::Elem>& tab) {
    std::set<addmds::Elem> s(tab.begin(), tab.end());
    return s.size() == tab.size();
}

inline std::vector<addmds::Elem> invert_table(const std::vector<addmds::Elem>& tab) {
    std::vector<addmds::Elem> inv(tab.size());
    for (addmds::Elem x = 0; x < tab.size(); ++x) inv[tab[x]] = x;
    return inv;
}

struct Triple {
    addmds::Elem a, b, c;
    bool operator<(const Triple& o) const { return std::tie(a, b, c) < std::tie(o.a, o.b, o.c); }
    bool operator==(const Triple& o) const { return a == o.a && b == o.b && c == o.c; }
};

// All (a, b, c) with a f(b f^{-1}(x)) = g(c g^{-1}(x)) for every x, by evaluation.
inline std::vector<Triple> brute_triples(const addmds::LinPoly& f, const addmds::LinPoly& g) {
    const auto& t = *f.tower();
    const auto tf = table(f), tg = table(g);
    const auto fi = invert_table(tf), gi = invert_table(tg);
    std::vector<Triple> out;
    for (addmds::Elem a = 1; a < t.size(); ++a)
        for (addmds::Elem b = 1; b < t.size(); ++b)
            for (addmds::Elem c = 1; c < t.size(); ++c) {
                bool ok = true;
                for (addmds::Elem x = 1; x < t.size() && ok; ++x)
                    ok = t.mul(a, tf[t.mul(b, fi[x])]) == tg[t.mul(c, gi[x])];
                if (ok) out.push_back({a, b, c});
            }
    return out;
}

// Exhaustive maximum of a set of triples pairwise distinct per coordinate.
inline std::size_t brute_max_matching(const std::vector<Triple>& ts) {
    std::size_t best = 0;
    std::vector<Triple> cur;
    auto rec = [&](auto&& self, std::size_t i) -> void {
        best = std::max(best, cur.size());
        if (cur.size() + (ts.size() - i) <= best) return;
        for (std::size_t j = i; j < ts.size(); ++j) {
            bool ok = true;
            for (const auto& u : cur) ok = ok && u.a != ts[j].a && u.b != ts[j].b && u.c != ts[j].c;
            if (!ok) continue;
            cur.push_back(ts[j]);
            self(self, j + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    return best;
}

// Codewords by plain message enumeration (q^{k_fq} of them).
inline std::vector<std::vector<addmds::Elem>> all_codewords(const addmds::AdditiveCode& c) {
    const auto& t = *c.tower();
    const auto& fq = t.base_field();
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < c.k_fq(); ++i) total *= fq.size();
    std::vector<std::vector<addmds::Elem>> out;
    for (std::uint64_t m = 0; m < total; ++m) {
        std::vector<addmds::Elem> w(c.n(), 0);
        std::uint64_t r = m;
        for (std::size_t i = 0; i < c.k_fq(); ++i) {
            const addmds::Elem coef = fq[r % fq.size()];
            r /= fq.size();
            for (std::size_t j = 0; j < c.n(); ++j) w[j] = t.add(w[j], t.mul(coef, c.gen()(i, j)));
        }
        out.push_back(std::move(w));
    }
    return out;
}

inline std::size_t brute_distance(const addmds::AdditiveCode& c) {
    std::size_t d = c.n();
    for (const auto& w : all_codewords(c)) {
        const auto wt = static_cast<std::size_t>(std::count_if(w.begin(), w.end(), [](auto x) { return x != 0; }));
        if (wt > 0) d = std::min(d, wt);
    }
    return d;
}

inline addmds::LinPoly random_invertible(const addmds::TowerPtr& t, std::mt19937_64& rng) {
    while (true) {
        std::vector<addmds::Elem> c(t->h());
        for (auto& x : c) x = static_cast<addmds::Elem>(rng() % t->size());
        addmds::LinPoly f(t, c);
        if (injective(table(f))) return f;
    }
}

inline addmds::Elem random_nonzero(const addmds::TowerPtr& t, std::mt19937_64& rng) {
    return static_cast<addmds::Elem>(1 + rng() % (t->size() - 1));
}

}  // namespace oracle
