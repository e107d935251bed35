#include "cyclotope/enumerator.hpp"

#include <algorithm>
#include <set>

namespace cyclotope {

void HalfExpPoly::add_term(long long exponent_halves, long long coefficient) {
    if (coefficient == 0) return;
    const auto [it, inserted] = terms.emplace(exponent_halves, coefficient);
    if (!inserted) {
        it->second += coefficient;
        if (it->second == 0) terms.erase(it);
    }
}

long long HalfExpPoly::evaluate_at_one() const {
    long long sum = 0;
    for (const auto& [exponent, coefficient] : terms) sum += coefficient;
    return sum;
}

bool HalfExpPoly::integral() const {
    return std::all_of(terms.begin(), terms.end(),
                       [](const auto& term) { return term.first % 2 == 0; });
}

std::string HalfExpPoly::str() const {
    if (terms.empty()) return "0";
    std::string out;
    for (const auto& [halves, coefficient] : terms) {
        if (!out.empty()) out += coefficient < 0 ? " - " : " + ";
        else if (coefficient < 0) out += "-";
        const long long magnitude = coefficient < 0 ? -coefficient : coefficient;
        const bool with_x = halves != 0;
        if (magnitude != 1 || !with_x) out += std::to_string(magnitude);
        if (with_x) {
            out += "x";
            if (halves != 2) {
                out += "^";
                if (halves % 2 == 0)
                    out += std::to_string(halves / 2);
                else
                    out += "{" + std::to_string(halves) + "/2}";
            }
        }
    }
    return out;
}

static void require_uniform(const Tope& base, std::span<const Tope> topes) {
    for (const auto& tope : topes)
        if (tope.t() != base.t())
            throw LengthMismatch(static_cast<std::size_t>(base.t()),
                                 static_cast<std::size_t>(tope.t()));
}

HalfExpPoly distance_enumerator(const Tope& base, std::span<const Tope> topes) {
    require_uniform(base, topes);
    HalfExpPoly poly;
    for (const auto& tope : topes) poly.add_term(2 * graph_distance(base, tope), 1);
    return poly;
}

namespace {

HalfExpPoly halfspace_sum(const Tope& base, std::span<const Tope> halfspace) {
    HalfExpPoly poly;
    const long long t = base.t();
    for (const auto& tope : halfspace) {
        const long long product = inner_product(base, tope);
        poly.add_term(t - product, 1);
        poly.add_term(t + product, 1);
    }
    return poly;
}

void require_negation_closed(std::span<const Tope> topes) {
    std::set<std::uint64_t> masks;
    for (const auto& tope : topes) masks.insert(tope_mask(tope));
    for (const auto& tope : topes)
        if (!masks.count(tope_mask(negate(tope)))) throw NotNegationClosed(to_string(tope));
}

}  // namespace

HalfExpPoly halfspace_form(const Tope& base, std::span<const Tope> topes, int positive_element) {
    require_uniform(base, topes);
    require_negation_closed(topes);
    if (positive_element < 1 || positive_element > base.t())
        throw BadSelector("element " + std::to_string(positive_element) + " outside E_t");
    std::vector<Tope> halfspace;
    for (const auto& tope : topes)
        if (tope.sign(positive_element - 1) > 0) halfspace.push_back(tope);
    return halfspace_sum(base, halfspace);
}

HalfExpPoly halfspace_form(const Tope& base, std::span<const Tope> topes,
                           std::span<const Tope> halfspace) {
    require_uniform(base, topes);
    require_negation_closed(topes);

    std::set<std::uint64_t> chosen;
    std::set<std::uint64_t> universe;
    for (const auto& tope : topes) universe.insert(tope_mask(tope));
    for (const auto& tope : halfspace) {
        if (!universe.count(tope_mask(tope)))
            throw BadSelector("tope " + to_string(tope) + " not in the set");
        if (chosen.count(tope_mask(negate(tope))))
            throw BadSelector("both members of the pair " + to_string(tope) + " selected");
        if (!chosen.insert(tope_mask(tope)).second)
            throw BadSelector("tope " + to_string(tope) + " selected twice");
    }
    if (2 * halfspace.size() != universe.size())
        throw BadSelector("selected " + std::to_string(halfspace.size()) + " of " +
                          std::to_string(universe.size()) + " topes");
    return halfspace_sum(base, halfspace);
}

}  // namespace cyclotope
