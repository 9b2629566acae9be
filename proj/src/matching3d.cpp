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

#include "addmds/matching3d.hpp"

#include <algorithm>
#include <array>
#include <bit>

#include "addmds/error.hpp"

namespace addmds {

namespace {

struct Bits {
    std::array<std::uint64_t, 4> w{};
    bool test(std::uint32_t i) const { return (w[i >> 6] >> (i & 63)) & 1u; }
    void set(std::uint32_t i) { w[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(std::uint32_t i) { w[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
    std::size_t count() const {
        std::size_t c = 0;
        for (auto x : w) c += static_cast<std::size_t>(std::popcount(x));
        return c;
    }
};

class Solver {
public:
    Solver(std::span<const Triple3> triples, std::size_t target, std::size_t floor, std::uint64_t budget)
        : triples_(triples), target_(target), best_size_(floor), budget_(budget) {
        std::vector<std::uint32_t> ys;
        for (const auto& t : triples) ys.push_back(t.y);
        std::sort(ys.begin(), ys.end());
        ys.erase(std::unique(ys.begin(), ys.end()), ys.end());
        groups_.resize(ys.size());
        for (std::size_t i = 0; i < triples.size(); ++i) {
            const auto g = static_cast<std::size_t>(std::lower_bound(ys.begin(), ys.end(), triples[i].y) - ys.begin());
            groups_[g].push_back(i);
        }
        // Most constrained groups first.
        std::stable_sort(groups_.begin(), groups_.end(),
                         [](const auto& a, const auto& b) { return a.size() < b.size(); });
    }

    void block_y(std::uint32_t y) { blocked_y_.set(y); }
    void use(std::size_t idx) {
        used_x_.set(triples_[idx].x);
        used_z_.set(triples_[idx].z);
        blocked_y_.set(triples_[idx].y);
        current_.push_back(idx);
    }

    void run() { dfs(0); }
    bool done() const { return target_ && best_size_ >= target_ && !best_.empty(); }
    const std::vector<std::size_t>& best() const { return best_; }
    std::uint64_t nodes() const { return nodes_; }

private:
    bool fits(std::size_t idx) const {
        const auto& t = triples_[idx];
        return !used_x_.test(t.x) && !used_z_.test(t.z);
    }

    std::size_t bound(std::size_t from) const {
        std::size_t groups = 0;
        Bits xs, zs;
        for (std::size_t g = from; g < groups_.size(); ++g) {
            bool any = false;
            for (auto idx : groups_[g]) {
                if (blocked_y_.test(triples_[idx].y)) break;
                if (fits(idx)) {
                    any = true;
                    xs.set(triples_[idx].x);
                    zs.set(triples_[idx].z);
                }
            }
            groups += any;
        }
        return std::min({groups, xs.count(), zs.count()});
    }

    void dfs(std::size_t g) {
        if (++nodes_ > budget_) throw Error(ErrorKind::BudgetExceeded, "3-dimensional matching search exceeded its node budget");
        if (current_.size() > best_size_) {
            best_size_ = current_.size();
            best_ = current_;
            if (done()) return;
        }
        if (g == groups_.size()) return;
        if (current_.size() + bound(g) <= best_size_) return;
        const auto& grp = groups_[g];
        if (!grp.empty() && !blocked_y_.test(triples_[grp.front()].y)) {
            for (auto idx : grp) {
                if (!fits(idx)) continue;
                const auto& t = triples_[idx];
                used_x_.set(t.x);
                used_z_.set(t.z);
                current_.push_back(idx);
                dfs(g + 1);
                current_.pop_back();
                used_x_.reset(t.x);
                used_z_.reset(t.z);
                if (done()) return;
            }
        }
        dfs(g + 1);
    }

    std::span<const Triple3> triples_;
    std::vector<std::vector<std::size_t>> groups_;
    std::size_t target_;
    std::size_t best_size_;
    std::uint64_t budget_;
    std::uint64_t nodes_ = 0;
    Bits used_x_, used_z_, blocked_y_;
    std::vector<std::size_t> current_, best_;
};

}  // namespace

MatchingResult max_3d_matching(std::span<const Triple3> triples, std::size_t domain, std::optional<std::size_t> forced,
                               std::size_t target, std::size_t at_least, std::uint64_t node_budget) {
    if (domain > 256) throw Error(ErrorKind::InvalidArgument, "matching domain larger than 256");
    for (const auto& t : triples)
        if (t.x >= domain || t.y >= domain || t.z >= domain)
            throw Error(ErrorKind::InvalidArgument, "triple coordinate outside the domain");
    // Sizes below at_least are not reported; best_size starts one below it.
    const std::size_t floor = at_least > 0 ? at_least - 1 : 0;
    Solver s(triples, target, floor, node_budget);
    if (forced) {
        if (*forced >= triples.size()) throw Error(ErrorKind::BadIndex, "forced triple index");
        s.use(*forced);
    }
    s.run();
    MatchingResult r;
    r.chosen = s.best();
    std::sort(r.chosen.begin(), r.chosen.end());
    r.nodes = s.nodes();
    return r;
}

}  // namespace addmds
