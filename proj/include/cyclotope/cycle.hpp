#pragma once

// Symmetric cycles in the tope graph: 2t-cycles whose vertex k+t is the
// negation of vertex k, found by depth-first search over flip sequences.

#include <cstddef>
#include <optional>
#include <vector>

#include "cyclotope/tope_set.hpp"

namespace cyclotope {

struct SymmetricCycle {
    int t = 0;
    std::vector<Tope> vertices;  // R^0 ... R^{2t-1}
    std::vector<int> flip_order; // element flipped at step j -> j+1, 1-based labels

    const Tope& vertex(std::size_t j) const { return vertices[j % vertices.size()]; }
    std::size_t length() const { return vertices.size(); }
};

// Builds the cycle that starts at `start` and flips `flips` (1-based labels,
// a permutation of E_t) one element per step; the second half is forced by
// antipodality. Returns nothing if any vertex falls outside the tope set.
std::optional<SymmetricCycle> build_cycle(const TopeSet& set, const Tope& start,
                                          const std::vector<int>& flips);

// All canonical symmetric cycles of the tope graph, deterministically
// ordered. A cycle is canonical when its first vertex is the least of its
// 2t vertices and its second vertex precedes its last. limit == 0 means all;
// with limit >= 1 the first `limit` cycles of the full canonical order are
// returned, and NoCycleFound is thrown when there are none.
std::vector<SymmetricCycle> find_symmetric_cycles(const TopeSet& set, std::size_t limit = 0);

// Checks every cycle invariant on a candidate vertex sequence: length 2t,
// single-element steps, antipodality, distinct vertices, flip permutation,
// membership (when a hosting set is given), and linear independence of the
// first t vertices over the rationals.
ValidationReport validate_cycle(const std::vector<Tope>& candidate, const TopeSet* hosting = nullptr);

inline ValidationReport validate_cycle(const std::vector<Tope>& candidate, const TopeSet& hosting) {
    return validate_cycle(candidate, &hosting);
}

// The distance signal of a cycle: ranks of the 2t vertices relative to a
// base tope, extended 2t-periodically.
struct DistanceVector {
    int t = 0;
    std::vector<long long> values;  // z(0) ... z(2t-1)
    std::optional<Tope> base;

    std::size_t length() const { return values.size(); }
};

// values(j) = d(base, R^j). Throws LengthMismatch on a foreign base.
DistanceVector distance_vector(const SymmetricCycle& cycle, const Tope& base);

// Wraps a raw value sequence, checking the distance-vector invariants:
// antipodal sums z(k) + z(k+t) = t, cyclic unit steps, entries in [0, t].
DistanceVector distance_vector_from_values(std::vector<long long> values);

// Periodic signal access, mathematical modulus for negative j.
long long signal_value(const DistanceVector& z, long long j);

}  // namespace cyclotope
