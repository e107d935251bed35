#pragma once

// Tope collections of a simple acyclic oriented matroid, plus the validator
// that certifies the structural assumptions the rest of the library leans on.

#include <cstdint>
#include <span>
#include <string>
#include <unordered_set>
#include <vector>

#include "cyclotope/tope.hpp"

namespace cyclotope {

struct TopeSet {
    int t = 0;
    std::vector<Tope> topes;  // canonically sorted, duplicate-free
    Tope base;                // the positive tope T^(+)
    bool acyclic = false;     // contains T^(+)
    bool simple = false;      // no equal or negated element columns

    // Sorts, deduplicates and computes the flags. Throws EmptyInput /
    // LengthMismatch on malformed input; structural defects only lower the
    // flags (the validator reports them).
    static TopeSet from_topes(std::vector<Tope> topes);

    bool contains(const Tope& tope) const {
        return tope.t() == t && masks_.count(tope_mask(tope)) > 0;
    }
    std::size_t size() const { return topes.size(); }

private:
    std::unordered_set<std::uint64_t> masks_;
};

// The full sign hypercube {-1,+1}^t.
TopeSet hypercube(int t);

struct ValidationCheck {
    std::string name;
    bool pass = false;
    std::string witness;  // empty when the check passes
};

struct ValidationReport {
    std::vector<ValidationCheck> checks;

    bool overall() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
    const ValidationCheck* find(const std::string& name) const {
        for (const auto& c : checks)
            if (c.name == name) return &c;
        return nullptr;
    }
};

// Checks: negation closure; acyclicity; simplicity; connectivity of the
// Hamming-1 tope graph; and the isometry property (BFS distance equals
// separation cardinality for all pairs). Failures are reported, not thrown.
ValidationReport validate_tope_set(const TopeSet& set);

}  // namespace cyclotope
