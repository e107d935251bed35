#pragma once

// Sign-vector arithmetic on topes: {-1,+1} vectors of length t.
//
// Conventions used across the library:
//   * positions inside a vector (coordinates, cycle steps, spectrum bins)
//     are 0-based;
//   * ground-set elements in public output (separation sets, flip orders)
//     carry 1-based labels, matching E_t = {1,...,t}.

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "cyclotope/errors.hpp"

namespace cyclotope {

struct Tope {
    std::vector<std::int8_t> signs;  // each entry is -1 or +1

    int t() const { return static_cast<int>(signs.size()); }
    int sign(int i) const { return signs[static_cast<std::size_t>(i)]; }

    bool operator==(const Tope&) const = default;
};

// Validating constructors. Throw EmptyInput / BadEntry.
Tope make_tope(std::span<const int> entries);
Tope make_tope(std::initializer_list<int> entries);

// The positive tope T^(+): all entries +1.
Tope positive_tope(int t);

Tope negate(const Tope& tope);

// Entrywise flip of a single coordinate, 0-based position.
Tope flipped(const Tope& tope, int position);

// "+-+" <-> tope. parse_tope throws ParseError.
std::string to_string(const Tope& tope);
Tope parse_tope(const std::string& text);

// Lexicographic order with +1 before -1, which matches the natural string
// order of the '+'/'-' form; T^(+) is the least tope of its length.
bool tope_less(const Tope& a, const Tope& b);

struct TopeLess {
    bool operator()(const Tope& a, const Tope& b) const { return tope_less(a, b); }
};

// Bitmask with bit i set iff signs[i] == -1; T^(+) maps to 0. Requires t <= 63.
std::uint64_t tope_mask(const Tope& tope);
Tope tope_from_mask(int t, std::uint64_t mask);

long long inner_product(const Tope& a, const Tope& b);

// Elements where the two topes disagree, as sorted 1-based labels.
std::vector<int> separation_set(const Tope& a, const Tope& b);

// Same set as a bitmask over 0-based positions.
std::uint64_t separation_mask(const Tope& a, const Tope& b);

// Graph distance in the tope graph: (t - <a,b>) / 2 = |separation_set|.
long long graph_distance(const Tope& a, const Tope& b);

// Rank in the tope poset based at `base`: distance to the base tope.
long long poset_rank(const Tope& tope, const Tope& base);

// Tope poset order based at `base`: containment of separation sets.
bool poset_leq(const Tope& a, const Tope& b, const Tope& base);

}  // namespace cyclotope
