#pragma once

// Shared test helpers: independent brute-force oracles and seeded input
// generators. Everything here deliberately avoids the library's search and
// solve paths so that tests cross-check rather than echo them.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "cyclotope/arrangement.hpp"
#include "cyclotope/cycle.hpp"
#include "cyclotope/tope_set.hpp"

namespace testutil {

using namespace cyclotope;

// Orientation- and rotation-independent key of a cyclic vertex sequence.
inline std::string cycle_key(const std::vector<Tope>& vertices) {
    const std::size_t n = vertices.size();
    std::string best;
    for (int direction = 0; direction < 2; ++direction) {
        for (std::size_t shift = 0; shift < n; ++shift) {
            std::string key;
            for (std::size_t j = 0; j < n; ++j) {
                const std::size_t at = direction == 0 ? (shift + j) % n
                                                      : (shift + n - j) % n;
                key += to_string(vertices[at]);
                key += '|';
            }
            if (best.empty() || key < best) best = key;
        }
    }
    return best;
}

// Brute-force enumeration of every symmetric cycle: walk every (start tope,
// flip permutation) pair, keep the walks that stay inside the set, and
// collect canonical keys. No pruning, no shared code with the library DFS.
inline std::set<std::string> oracle_cycle_keys(const TopeSet& set) {
    std::set<std::string> keys;
    std::vector<int> order(static_cast<std::size_t>(set.t));
    for (int i = 0; i < set.t; ++i) order[static_cast<std::size_t>(i)] = i;

    for (const Tope& start : set.topes) {
        std::vector<int> permutation = order;
        do {
            std::vector<Tope> walk{start};
            bool inside = true;
            for (int k = 0; k < 2 * set.t - 1 && inside; ++k) {
                walk.push_back(
                    flipped(walk.back(), permutation[static_cast<std::size_t>(k % set.t)]));
                inside = set.contains(walk.back());
            }
            if (!inside) continue;
            // flipping each element once per half forces antipodal symmetry
            // and closure; membership was the only real filter
            bool symmetric = true;
            for (int k = 0; k < set.t && symmetric; ++k)
                symmetric = walk[static_cast<std::size_t>(k + set.t)] ==
                            negate(walk[static_cast<std::size_t>(k)]);
            if (symmetric) keys.insert(cycle_key(walk));
        } while (std::next_permutation(permutation.begin(), permutation.end()));
    }
    return keys;
}

// All subsets of the cycle's 2t vertices whose entrywise sum equals the
// target, as bitmasks over cycle positions. Exhaustive over 2^(2t).
inline std::vector<std::uint32_t> subsets_summing_to(const SymmetricCycle& cycle,
                                                     const Tope& target) {
    const std::size_t n = cycle.length();
    const int t = cycle.t;
    std::vector<std::vector<int>> sums(std::size_t{1} << n,
                                       std::vector<int>(static_cast<std::size_t>(t), 0));
    for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << n); ++mask) {
        const int lowest = std::countr_zero(mask);
        sums[mask] = sums[mask & (mask - 1)];
        for (int i = 0; i < t; ++i)
            sums[mask][static_cast<std::size_t>(i)] +=
                cycle.vertices[static_cast<std::size_t>(lowest)].sign(i);
    }
    std::vector<std::uint32_t> matching;
    for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << n); ++mask) {
        bool equal = true;
        for (int i = 0; i < t && equal; ++i)
            equal = sums[mask][static_cast<std::size_t>(i)] == target.sign(i);
        if (equal) matching.push_back(mask);
    }
    return matching;
}

// Inclusion-minimal members of a family of bitmask subsets.
inline std::vector<std::uint32_t> inclusion_minimal(const std::vector<std::uint32_t>& family) {
    std::vector<std::uint32_t> minimal;
    for (const std::uint32_t candidate : family) {
        bool is_minimal = true;
        for (const std::uint32_t other : family) {
            if (other != candidate && (other & ~candidate) == 0) {
                is_minimal = false;
                break;
            }
        }
        if (is_minimal) minimal.push_back(candidate);
    }
    return minimal;
}

// Seeded rational arrangement with a strictly positive first coordinate per
// vector (so the all-plus system is feasible) and no proportional rows.
inline Arrangement random_arrangement(std::mt19937_64& rng, int d, int t) {
    Arrangement arrangement;
    arrangement.d = d;
    auto proportional = [](const RatVector& a, const RatVector& b) {
        for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t j = i + 1; j < a.size(); ++j)
                if (a[i] * b[j] != a[j] * b[i]) return false;
        return true;
    };
    while (arrangement.t() < t) {
        RatVector row;
        row.emplace_back(BigInt(1 + static_cast<long long>(rng() % 9)));
        for (int c = 1; c < d; ++c)
            row.emplace_back(BigInt(static_cast<long long>(rng() % 19) - 9));
        bool fresh = true;
        for (const auto& other : arrangement.vectors)
            if (proportional(row, other)) {
                fresh = false;
                break;
            }
        if (fresh) arrangement.vectors.push_back(std::move(row));
    }
    return arrangement;
}

inline Tope random_tope(std::mt19937_64& rng, int t) {
    Tope tope = positive_tope(t);
    for (int i = 0; i < t; ++i)
        if (rng() % 2) tope.signs[static_cast<std::size_t>(i)] = -1;
    return tope;
}

}  // namespace testutil
