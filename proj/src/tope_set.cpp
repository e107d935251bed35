#include "cyclotope/tope_set.hpp"

#include <algorithm>
#include <queue>
#include <unordered_map>

namespace cyclotope {

TopeSet TopeSet::from_topes(std::vector<Tope> topes) {
    if (topes.empty()) throw EmptyInput();
    TopeSet set;
    set.t = topes.front().t();
    if (set.t < 1 || set.t > 63) throw BadLength(static_cast<std::size_t>(set.t));
    for (const auto& tope : topes)
        if (tope.t() != set.t)
            throw LengthMismatch(static_cast<std::size_t>(set.t),
                                 static_cast<std::size_t>(tope.t()));

    std::sort(topes.begin(), topes.end(), TopeLess{});
    topes.erase(std::unique(topes.begin(), topes.end()), topes.end());
    set.topes = std::move(topes);
    set.base = positive_tope(set.t);
    for (const auto& tope : set.topes) set.masks_.insert(tope_mask(tope));

    set.acyclic = set.contains(set.base);

    set.simple = true;
    for (int i = 0; i < set.t && set.simple; ++i) {
        for (int j = i + 1; j < set.t && set.simple; ++j) {
            bool equal = true, negated = true;
            for (const auto& tope : set.topes) {
                const int si = tope.sign(i), sj = tope.sign(j);
                equal = equal && si == sj;
                negated = negated && si == -sj;
                if (!equal && !negated) break;
            }
            if (equal || negated) set.simple = false;
        }
    }
    return set;
}

TopeSet hypercube(int t) {
    if (t < 1 || t > 20) throw BadLength(static_cast<std::size_t>(t));
    std::vector<Tope> topes;
    topes.reserve(std::size_t{1} << t);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << t); ++mask)
        topes.push_back(tope_from_mask(t, mask));
    return TopeSet::from_topes(std::move(topes));
}

// Adjacency lists of the Hamming-1 tope graph.
static std::vector<std::vector<std::size_t>> tope_graph(const TopeSet& set) {
    std::unordered_map<std::uint64_t, std::size_t> index;
    index.reserve(set.size() * 2);
    for (std::size_t i = 0; i < set.size(); ++i) index[tope_mask(set.topes[i])] = i;

    std::vector<std::vector<std::size_t>> adjacency(set.size());
    for (std::size_t i = 0; i < set.size(); ++i) {
        const std::uint64_t mask = tope_mask(set.topes[i]);
        for (int e = 0; e < set.t; ++e) {
            const auto it = index.find(mask ^ (std::uint64_t{1} << e));
            if (it != index.end()) adjacency[i].push_back(it->second);
        }
    }
    return adjacency;
}

static std::vector<int> bfs_distances(const std::vector<std::vector<std::size_t>>& adjacency,
                                      std::size_t source) {
    std::vector<int> dist(adjacency.size(), -1);
    std::queue<std::size_t> frontier;
    dist[source] = 0;
    frontier.push(source);
    while (!frontier.empty()) {
        const std::size_t at = frontier.front();
        frontier.pop();
        for (const std::size_t next : adjacency[at]) {
            if (dist[next] >= 0) continue;
            dist[next] = dist[at] + 1;
            frontier.push(next);
        }
    }
    return dist;
}

ValidationReport validate_tope_set(const TopeSet& set) {
    ValidationReport report;

    {
        ValidationCheck check{"negation_closure", true, ""};
        for (const auto& tope : set.topes) {
            if (!set.contains(negate(tope))) {
                check.pass = false;
                check.witness = to_string(tope);
                break;
            }
        }
        report.checks.push_back(std::move(check));
    }
    {
        ValidationCheck check{"acyclic", set.contains(set.base), ""};
        if (!check.pass) check.witness = "missing " + to_string(set.base);
        report.checks.push_back(std::move(check));
    }
    {
        ValidationCheck check{"simple", true, ""};
        for (int i = 0; i < set.t && check.pass; ++i) {
            for (int j = i + 1; j < set.t && check.pass; ++j) {
                bool equal = true, negated = true;
                for (const auto& tope : set.topes) {
                    const int si = tope.sign(i), sj = tope.sign(j);
                    equal = equal && si == sj;
                    negated = negated && si == -sj;
                    if (!equal && !negated) break;
                }
                if (equal || negated) {
                    check.pass = false;
                    check.witness = "elements " + std::to_string(i + 1) + "," +
                                    std::to_string(j + 1) +
                                    (equal ? " parallel" : " antiparallel");
                }
            }
        }
        report.checks.push_back(std::move(check));
    }

    const auto adjacency = tope_graph(set);
    {
        ValidationCheck check{"connected", true, ""};
        const std::vector<int> from_first = bfs_distances(adjacency, 0);
        for (std::size_t i = 0; i < set.size(); ++i) {
            if (from_first[i] < 0) {
                check.pass = false;
                check.witness = to_string(set.topes[i]) + " unreachable from " +
                                to_string(set.topes[0]);
                break;
            }
        }
        report.checks.push_back(std::move(check));
    }
    {
        // graph distance must equal separation cardinality for every pair
        ValidationCheck check{"isometry", true, ""};
        for (std::size_t i = 0; i < set.size() && check.pass; ++i) {
            const std::vector<int> dist = bfs_distances(adjacency, i);
            for (std::size_t j = 0; j < set.size(); ++j) {
                const long long sep = graph_distance(set.topes[i], set.topes[j]);
                if (dist[j] != sep) {
                    check.pass = false;
                    check.witness = to_string(set.topes[i]) + " vs " + to_string(set.topes[j]) +
                                    ": bfs " + std::to_string(dist[j]) + ", separation " +
                                    std::to_string(sep);
                    break;
                }
            }
        }
        report.checks.push_back(std::move(check));
    }
    return report;
}

}  // namespace cyclotope
