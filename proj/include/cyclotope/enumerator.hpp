#pragma once

// Distance enumerator polynomials and their halfspace rewriting. Exponents
// are stored as exact half-integer counts so that x^{t/2} and x^{<B,T>/2}
// factors combine without any rational arithmetic on exponents.

#include <map>
#include <span>
#include <string>

#include "cyclotope/tope.hpp"

namespace cyclotope {

struct HalfExpPoly {
    // maps exponent-in-halves to coefficient; x^{3/2} lives at key 3,
    // x^2 at key 4. Zero coefficients are never stored.
    std::map<long long, long long> terms;

    bool operator==(const HalfExpPoly&) const = default;

    void add_term(long long exponent_halves, long long coefficient);
    long long evaluate_at_one() const;
    bool integral() const;  // every exponent an integer
    std::string str() const;
};

// sum over S of x^{d(B, T)}.
HalfExpPoly distance_enumerator(const Tope& base, std::span<const Tope> topes);

// The halfspace rewriting x^{t/2} sum_{T in halfspace} (x^{-<B,T>/2} +
// x^{<B,T>/2}) with the halfspace picked as the topes positive on the given
// element (1-based). S must be closed under negation.
HalfExpPoly halfspace_form(const Tope& base, std::span<const Tope> topes, int positive_element);

// Same rewriting over an explicit selection, one tope per antipodal pair
// of S; BadSelector when the selection misses or doubles a pair.
HalfExpPoly halfspace_form(const Tope& base, std::span<const Tope> topes,
                           std::span<const Tope> halfspace);

}  // namespace cyclotope
