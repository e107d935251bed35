#include "cyclotope/cycle.hpp"

#include <algorithm>
#include <cstdlib>

#include "cyclotope/rational.hpp"

namespace cyclotope {

std::optional<SymmetricCycle> build_cycle(const TopeSet& set, const Tope& start,
                                          const std::vector<int>& flips) {
    const int t = set.t;
    if (start.t() != t) throw LengthMismatch(static_cast<std::size_t>(t),
                                             static_cast<std::size_t>(start.t()));
    if (static_cast<int>(flips.size()) != t) throw LengthMismatch(static_cast<std::size_t>(t),
                                                                  flips.size());
    SymmetricCycle cycle;
    cycle.t = t;
    cycle.vertices.reserve(2 * static_cast<std::size_t>(t));
    cycle.flip_order.reserve(2 * static_cast<std::size_t>(t));

    Tope at = start;
    for (int k = 0; k < t; ++k) {
        if (!set.contains(at)) return std::nullopt;
        cycle.vertices.push_back(at);
        at = flipped(at, flips[static_cast<std::size_t>(k)] - 1);
    }
    for (int k = 0; k < t; ++k) {
        const Tope antipode = negate(cycle.vertices[static_cast<std::size_t>(k)]);
        if (!set.contains(antipode)) return std::nullopt;
        cycle.vertices.push_back(antipode);
    }
    for (int half = 0; half < 2; ++half)
        for (int k = 0; k < t; ++k) cycle.flip_order.push_back(flips[static_cast<std::size_t>(k)]);
    return cycle;
}

namespace {

struct CycleSearch {
    const TopeSet& set;
    std::vector<SymmetricCycle>& out;
    Tope start;
    std::vector<Tope> path;
    std::vector<int> flips;     // 1-based
    std::vector<bool> used;

    // canonical start: no vertex of the cycle, nor its antipode, may precede
    // the start vertex
    bool admissible(const Tope& vertex) const {
        return !tope_less(vertex, start) && !tope_less(negate(vertex), start);
    }

    void extend() {
        const int t = set.t;
        if (static_cast<int>(path.size()) == t) {
            // orientation: second vertex must precede the last (= -R^{t-1})
            if (!tope_less(path[1], negate(path.back()))) return;
            // the one unused element closes the half-path onto -R^0
            int last = 0;
            while (used[static_cast<std::size_t>(last)]) ++last;
            flips.push_back(last + 1);
            auto cycle = build_cycle(set, start, flips);
            if (cycle) out.push_back(std::move(*cycle));
            flips.pop_back();
            return;
        }
        const Tope at = path.back();  // by value: path reallocates during recursion
        for (int e = 0; e < t; ++e) {
            if (used[static_cast<std::size_t>(e)]) continue;
            Tope next = flipped(at, e);
            if (!set.contains(next) || !admissible(next)) continue;
            if (static_cast<int>(path.size()) == t - 1 && !set.contains(negate(next))) continue;
            used[static_cast<std::size_t>(e)] = true;
            flips.push_back(e + 1);
            path.push_back(std::move(next));
            extend();
            path.pop_back();
            flips.pop_back();
            used[static_cast<std::size_t>(e)] = false;
        }
    }
};

bool cycle_less(const SymmetricCycle& a, const SymmetricCycle& b) {
    return std::lexicographical_compare(a.vertices.begin(), a.vertices.end(), b.vertices.begin(),
                                        b.vertices.end(), TopeLess{});
}

}  // namespace

std::vector<SymmetricCycle> find_symmetric_cycles(const TopeSet& set, std::size_t limit) {
    if (set.t < 2) throw DegenerateGroundSet(set.t);

    std::vector<SymmetricCycle> cycles;
    for (const Tope& start : set.topes) {
        // a canonical start never is the larger member of its antipodal pair
        if (tope_less(negate(start), start)) continue;
        CycleSearch search{set, cycles, start, {start}, {}, std::vector<bool>(
                               static_cast<std::size_t>(set.t), false)};
        search.extend();
    }
    std::sort(cycles.begin(), cycles.end(), cycle_less);
    if (limit >= 1) {
        if (cycles.empty()) throw NoCycleFound();
        if (cycles.size() > limit) cycles.resize(limit);
    }
    return cycles;
}

ValidationReport validate_cycle(const std::vector<Tope>& candidate, const TopeSet* hosting) {
    ValidationReport report;
    const std::size_t n = candidate.size();

    {
        ValidationCheck check{"length", n >= 4 && n % 2 == 0, ""};
        if (!check.pass) check.witness = std::to_string(n) + " vertices";
        report.checks.push_back(check);
        if (!check.pass) return report;
    }
    const int t = static_cast<int>(n / 2);
    {
        ValidationCheck check{"uniform_length", true, ""};
        for (const auto& v : candidate)
            if (v.t() != candidate.front().t()) {
                check.pass = false;
                check.witness = to_string(v);
                break;
            }
        if (check.pass && candidate.front().t() != t) {
            check.pass = false;
            check.witness = "vertex length " + std::to_string(candidate.front().t()) +
                            ", expected " + std::to_string(t);
        }
        report.checks.push_back(check);
        if (!check.pass) return report;
    }
    {
        ValidationCheck check{"unit_steps", true, ""};
        for (std::size_t j = 0; j < n; ++j) {
            if (separation_set(candidate[j], candidate[(j + 1) % n]).size() != 1) {
                check.pass = false;
                check.witness = "step " + std::to_string(j);
                break;
            }
        }
        report.checks.push_back(check);
    }
    {
        ValidationCheck check{"antipodality", true, ""};
        for (int k = 0; k < t; ++k) {
            if (candidate[static_cast<std::size_t>(k + t)] !=
                negate(candidate[static_cast<std::size_t>(k)])) {
                check.pass = false;
                check.witness = "position " + std::to_string(k);
                break;
            }
        }
        report.checks.push_back(check);
    }
    {
        ValidationCheck check{"distinct_vertices", true, ""};
        std::vector<Tope> sorted = candidate;
        std::sort(sorted.begin(), sorted.end(), TopeLess{});
        const auto dup = std::adjacent_find(sorted.begin(), sorted.end());
        if (dup != sorted.end()) {
            check.pass = false;
            check.witness = to_string(*dup);
        }
        report.checks.push_back(check);
    }
    {
        // the first t steps must flip each element exactly once
        ValidationCheck check{"flip_permutation", true, ""};
        std::vector<bool> seen(static_cast<std::size_t>(t), false);
        for (int k = 0; k < t && check.pass; ++k) {
            const auto sep = separation_set(candidate[static_cast<std::size_t>(k)],
                                            candidate[static_cast<std::size_t>(k) + 1]);
            if (sep.size() != 1 || seen[static_cast<std::size_t>(sep[0] - 1)]) {
                check.pass = false;
                check.witness = "step " + std::to_string(k);
            } else {
                seen[static_cast<std::size_t>(sep[0] - 1)] = true;
            }
        }
        report.checks.push_back(check);
    }
    if (hosting) {
        ValidationCheck check{"membership", true, ""};
        for (const auto& v : candidate) {
            if (!hosting->contains(v)) {
                check.pass = false;
                check.witness = to_string(v);
                break;
            }
        }
        report.checks.push_back(check);
    }
    {
        // first t vertices span R^t
        ValidationCheck check{"basis", true, ""};
        RatMatrix m;
        for (int k = 0; k < t; ++k) {
            RatVector row;
            for (int i = 0; i < t; ++i)
                row.emplace_back(BigInt(candidate[static_cast<std::size_t>(k)].sign(i)));
            m.push_back(std::move(row));
        }
        const int rank = exact_rank(std::move(m));
        if (rank != t) {
            check.pass = false;
            check.witness = "rank " + std::to_string(rank) + " of " + std::to_string(t);
        }
        report.checks.push_back(check);
    }
    return report;
}

DistanceVector distance_vector(const SymmetricCycle& cycle, const Tope& base) {
    DistanceVector z;
    z.t = cycle.t;
    z.base = base;
    z.values.reserve(cycle.length());
    for (const auto& vertex : cycle.vertices) z.values.push_back(graph_distance(base, vertex));
    return z;
}

DistanceVector distance_vector_from_values(std::vector<long long> values) {
    if (values.empty() || values.size() % 2 != 0) throw BadLength(values.size());
    const int t = static_cast<int>(values.size() / 2);
    const std::size_t n = values.size();
    for (std::size_t j = 0; j < n; ++j) {
        if (values[j] < 0 || values[j] > t)
            throw NonIntegerResult("value " + std::to_string(values[j]) + " outside [0, t]");
        if (std::abs(values[(j + 1) % n] - values[j]) != 1)
            throw NonIntegerResult("non-unit step at position " + std::to_string(j));
    }
    for (int k = 0; k < t; ++k)
        if (values[static_cast<std::size_t>(k)] + values[static_cast<std::size_t>(k + t)] != t)
            throw NonIntegerResult("antipodal sum at position " + std::to_string(k));
    DistanceVector z;
    z.t = t;
    z.values = std::move(values);
    return z;
}

long long signal_value(const DistanceVector& z, long long j) {
    const long long n = static_cast<long long>(z.length());
    long long r = j % n;
    if (r < 0) r += n;
    return z.values[static_cast<std::size_t>(r)];
}

}  // namespace cyclotope
