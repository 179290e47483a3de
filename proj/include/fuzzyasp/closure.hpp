#pragma once

// Closure of a set of values under the connectives, to a bounded operator depth.

#include <array>
#include <cmath>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "connectives.hpp"

namespace fuzzyasp {

namespace detail {

// Deduplication by parameter tolerance.  Values are bucketed on a grid of
// width eps; a lookup probes the neighbouring buckets so that two values
// within eps are always found regardless of where the grid boundaries fall.
class ValueSet {
public:
    explicit ValueSet(double eps) : eps_(eps) {}

    bool insert(const FuzzyTruth& x) {
        if (contains(x)) return false;
        buckets_[key(x)].push_back(values_.size());
        values_.push_back(x);
        return true;
    }

    bool contains(const FuzzyTruth& x) const {
        const Key base = key(x);
        for (int m = 0; m < 81; ++m) {
            Key k = base;
            int r = m;
            for (int i = 0; i < 4; ++i, r /= 3) k[i] += r % 3 - 1;
            auto it = buckets_.find(k);
            if (it == buckets_.end()) continue;
            for (std::size_t idx : it->second)
                if (equal(values_[idx], x, eps_)) return true;
        }
        return false;
    }

    const std::vector<FuzzyTruth>& values() const noexcept { return values_; }
    std::size_t size() const noexcept { return values_.size(); }

private:
    using Key = std::array<std::int64_t, 5>;

    Key key(const FuzzyTruth& x) const {
        return {std::llround(x.a() / eps_), std::llround(x.b() / eps_), std::llround(x.c() / eps_),
                std::llround(x.d() / eps_), x.truncated() ? 1 : 0};
    }

    double eps_;
    std::vector<FuzzyTruth> values_;
    std::map<Key, std::vector<std::size_t>> buckets_;
};

} // namespace detail

/// Closure of `seeds` under negate, naf, conj, disj and kagg, `depth` levels
/// deep.  Knowledge aggregations without a result are skipped.
inline std::vector<FuzzyTruth> closure_enumerate(const std::vector<FuzzyTruth>& seeds, std::size_t depth,
                                                 std::size_t max_size = 100000, double eps = default_tolerance) {
    if (depth > 4) throw ClosureTooLarge("closure depth is limited to 4");
    detail::ValueSet set(eps);
    auto add = [&](const FuzzyTruth& x) {
        if (set.insert(x) && set.size() > max_size)
            throw ClosureTooLarge("closure exceeds " + std::to_string(max_size) + " values");
    };
    for (const auto& s : seeds) add(s);
    for (std::size_t level = 0; level < depth; ++level) {
        const std::vector<FuzzyTruth> current = set.values();
        for (const auto& x : current) {
            add(negate(x));
            add(naf(x));
        }
        for (const auto& x : current) {
            for (const auto& y : current) {
                add(conj(x, y));
                add(disj(x, y));
                if (auto k = try_kagg(x, y, eps)) add(*k);
            }
        }
    }
    return set.values();
}

} // namespace fuzzyasp
