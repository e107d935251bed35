#include "cyclotope/campaign.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include <json.hpp>

#include "cyclotope/committee.hpp"
#include "cyclotope/cycle.hpp"
#include "cyclotope/enumerator.hpp"
#include "cyclotope/identities.hpp"

namespace cyclotope {

using json = nlohmann::ordered_json;

namespace {

struct Tally {
    std::size_t checks = 0;
    std::size_t failures = 0;
    std::vector<std::string> failed;

    void count(const std::string& where, bool ok) {
        ++checks;
        if (!ok) {
            ++failures;
            failed.push_back(where);
        }
    }
    void absorb(const std::string& where, const IdentityReport& report) {
        for (const auto& check : report.checks)
            count(where + "/" + report.name + "/" + check.name, check.pass);
    }
};

json identity_json(const IdentityReport& report) {
    json list = json::array();
    for (const auto& check : report.checks) {
        json item;
        item["name"] = report.name + "/" + check.name;
        item["value"] = check.value;
        item["reference"] = check.reference;
        item["residual"] = check.residual;
        item["pass"] = check.pass;
        list.push_back(std::move(item));
    }
    return list;
}

json validation_json(const ValidationReport& report) {
    json doc;
    doc["overall"] = report.overall();
    json checks = json::array();
    for (const auto& check : report.checks) {
        json item;
        item["name"] = check.name;
        item["pass"] = check.pass;
        if (!check.witness.empty()) item["witness"] = check.witness;
        checks.push_back(std::move(item));
    }
    doc["checks"] = std::move(checks);
    return doc;
}

bool sums_to(const std::vector<Tope>& members, const Tope& target) {
    std::vector<long long> sum(static_cast<std::size_t>(target.t()), 0);
    for (const auto& member : members) {
        if (member.t() != target.t()) return false;
        for (int i = 0; i < target.t(); ++i) sum[static_cast<std::size_t>(i)] += member.sign(i);
    }
    for (int i = 0; i < target.t(); ++i)
        if (sum[static_cast<std::size_t>(i)] != target.sign(i)) return false;
    return true;
}

bool rounds_to(double value, long long exact, double tolerance) {
    return std::abs(value - static_cast<double>(exact)) <= tolerance &&
           std::llround(value) == exact;
}

// Everything checked per cycle: committee, the eight exact and six spectral
// cardinality routes, the closed-form spectrum, and the signal identities.
json per_cycle_suite(const SymmetricCycle& cycle, std::size_t index, const Tope& base,
                     double tolerance, Tally& tally) {
    const std::string where = "cycle_" + std::to_string(index);
    json entry;
    entry["index"] = index;
    entry["start"] = to_string(cycle.vertices.front());
    entry["flip_order"] = std::vector<int>(cycle.flip_order.begin(),
                                           cycle.flip_order.begin() + cycle.t);

    const DistanceVector z = distance_vector(cycle, base);
    entry["distance_vector"] = z.values;

    long long exact = -1;
    try {
        const Committee committee = min_elements(cycle, base);
        json committee_doc;
        committee_doc["positions"] = committee.positions;
        committee_doc["cardinality"] = committee.cardinality();
        entry["committee"] = std::move(committee_doc);

        const long long cardinality = static_cast<long long>(committee.cardinality());
        tally.count(where + "/committee_sum_certificate", sums_to(committee.members, base));
        tally.count(where + "/committee_cardinality_odd", cardinality % 2 == 1);
        tally.count(where + "/committee_cardinality_bounds",
                    cardinality >= 1 && cardinality <= cycle.t);

        const Committee via_solver = BasisSolver(cycle).decompose(base);
        tally.count(where + "/committee_equals_decomposition",
                    via_solver.positions == committee.positions);
        exact = cardinality;
    } catch (const Error& e) {
        tally.count(where + "/committee: " + e.what(), false);
        return entry;
    }

    json exact_doc;
    bool all_equal = true;
    for (const ExactCardinalityForm form : kExactForms) {
        const long long value = committee_card_quadratic(z, form);
        exact_doc[to_string(form)] = value;
        all_equal = all_equal && value == exact;
    }
    entry["exact_variants"] = std::move(exact_doc);
    tally.count(where + "/exact_variants_agree", all_equal);

    json spectral_doc;
    for (const SpectralCardinalityForm form : kSpectralForms) {
        const double value = committee_card_spectral(z, form);
        spectral_doc[to_string(form)] = value;
        tally.count(where + "/spectral/" + to_string(form), rounds_to(value, exact, tolerance));
    }
    entry["spectral_variants"] = std::move(spectral_doc);

    {
        const Spectrum direct = dft(z);
        const Spectrum closed = spectrum_closed_form(z);
        double max_residual = 0.0;
        for (std::size_t k = 0; k < direct.length(); ++k)
            max_residual =
                std::max(max_residual, std::abs(direct.values[k] - closed.values[k]));
        entry["closed_form_max_residual"] = max_residual;
        tally.count(where + "/closed_form_spectrum", max_residual <= spectrum_tolerance(cycle.t));
    }

    json identities = json::array();
    for (const IdentityReport& report :
         {basic_sums(z), spectrum_structure(z, tolerance),
          translation_invariance(z, 1, tolerance),
          translation_invariance(z, cycle.t, tolerance)}) {
        tally.absorb(where, report);
        for (auto& item : identity_json(report)) identities.push_back(std::move(item));
    }
    entry["identities"] = std::move(identities);
    return entry;
}

std::vector<std::size_t> sample_indices(std::size_t universe, std::size_t want,
                                        std::mt19937_64& rng) {
    std::vector<std::size_t> indices;
    if (universe <= want) {
        indices.resize(universe);
        for (std::size_t i = 0; i < universe; ++i) indices[i] = i;
        return indices;
    }
    std::vector<bool> taken(universe, false);
    while (indices.size() < want) {
        const std::size_t i = static_cast<std::size_t>(rng() % universe);
        if (taken[i]) continue;
        taken[i] = true;
        indices.push_back(i);
    }
    std::sort(indices.begin(), indices.end());
    return indices;
}

}  // namespace

CampaignReport run_campaign(const TopeSet& set, const CampaignOptions& options) {
    CampaignReport out;
    Tally tally;
    json doc;
    doc["kind"] = "tope_set";
    doc["t"] = set.t;
    doc["tope_count"] = set.size();
    doc["options"] = {{"tolerance", options.tolerance},
                      {"seed", options.seed},
                      {"cycle_limit", options.cycle_limit}};

    const ValidationReport validation = validate_tope_set(set);
    doc["validation"] = validation_json(validation);
    out.validation_ok = validation.overall();
    if (!out.validation_ok) {
        doc["summary"] = {{"checks", 0}, {"failures", 0}, {"pass", false}};
        out.json_text = doc.dump(2);
        return out;
    }

    const Tope base = options.base.value_or(positive_tope(set.t));
    std::mt19937_64 rng(options.seed);

    std::vector<SymmetricCycle> cycles;
    try {
        cycles = find_symmetric_cycles(set, options.cycle_limit);
    } catch (const Error& e) {
        tally.count(std::string("cycle_enumeration: ") + e.what(), false);
    }
    doc["cycle_count"] = cycles.size();

    json cycle_entries = json::array();
    for (std::size_t i = 0; i < cycles.size(); ++i)
        cycle_entries.push_back(per_cycle_suite(cycles[i], i, base, options.tolerance, tally));
    doc["cycles"] = std::move(cycle_entries);

    // decomposition sweep: every tope (or a seeded sample) against every cycle
    {
        const std::vector<std::size_t> tope_indices =
            set.size() > options.tope_sample_threshold
                ? sample_indices(set.size(), options.tope_sample, rng)
                : sample_indices(set.size(), set.size(), rng);
        std::size_t pair_count = 0;
        const std::size_t before = tally.failures;
        for (std::size_t c = 0; c < cycles.size(); ++c) {
            const SymmetricCycle& cycle = cycles[c];
            const BasisSolver solver(cycle);
            for (const std::size_t ti : tope_indices) {
                const Tope& tope = set.topes[ti];
                const std::string where =
                    "decomposition/cycle_" + std::to_string(c) + "/" + to_string(tope);
                ++pair_count;
                try {
                    const Committee q = solver.decompose(tope);
                    tally.count(where + "/sum", sums_to(q.members, tope));
                    tally.count(where + "/odd", q.cardinality() % 2 == 1);
                    const DistanceVector z_tope = distance_vector(cycle, tope);
                    const double spectral = decomposition_card_spectral(z_tope);
                    tally.count(where + "/spectral_cardinality",
                                rounds_to(spectral, static_cast<long long>(q.cardinality()),
                                          options.tolerance));
                    const IdentityReport sums = basic_sums(z_tope);
                    tally.count(where + "/signal_sums", sums.pass());
                } catch (const Error& e) {
                    tally.count(where + ": " + e.what(), false);
                }
            }
        }
        doc["decomposition"] = {{"cycles", cycles.size()},
                                {"topes", tope_indices.size()},
                                {"pairs", pair_count},
                                {"failures", tally.failures - before}};
    }

    // Gram distance formula over tope pairs, against the first cycle
    if (!cycles.empty()) {
        const SymmetricCycle& cycle = cycles.front();
        const BasisSolver solver(cycle);
        const GramMatrix gram = gram_matrix(cycle);
        std::vector<std::vector<int>> indicators;
        indicators.reserve(set.size());
        for (const auto& tope : set.topes)
            indicators.push_back(indicator_vector(solver.decompose(tope), cycle.length()));

        const std::size_t before = tally.failures;
        std::size_t pair_count = 0;
        auto check_pair = [&](std::size_t a, std::size_t b) {
            long long form = 0;
            for (std::size_t i = 0; i < cycle.length(); ++i) {
                if (indicators[b][i] == 0) continue;
                for (std::size_t j = 0; j < cycle.length(); ++j)
                    if (indicators[a][j] != 0) form += gram.entries[i][j];
            }
            const long long via_gram = (cycle.t - form) / 2;
            const bool ok = (cycle.t - form) % 2 == 0 &&
                            via_gram == graph_distance(set.topes[a], set.topes[b]);
            ++pair_count;
            tally.count("gram/" + to_string(set.topes[a]) + "/" + to_string(set.topes[b]), ok);
        };
        if (set.size() <= options.tope_sample_threshold) {
            for (std::size_t a = 0; a < set.size(); ++a)
                for (std::size_t b = a; b < set.size(); ++b) check_pair(a, b);
        } else {
            for (std::size_t k = 0; k < options.gram_pair_sample; ++k)
                check_pair(static_cast<std::size_t>(rng() % set.size()),
                           static_cast<std::size_t>(rng() % set.size()));
        }
        doc["gram"] = {{"cycle_index", 0},
                       {"pairs", pair_count},
                       {"failures", tally.failures - before}};
    }

    // enumerator identities: full set with every element selector, and every
    // contiguous window of the leading cycles
    {
        const std::vector<std::size_t> base_indices =
            sample_indices(set.size(), options.enumerator_base_cap, rng);
        const std::size_t before = tally.failures;
        std::size_t selector_checks = 0, window_checks = 0;
        for (const std::size_t bi : base_indices) {
            const Tope& enum_base = set.topes[bi];
            const HalfExpPoly direct = distance_enumerator(enum_base, set.topes);
            tally.count("enumerator/" + to_string(enum_base) + "/count",
                        direct.evaluate_at_one() == static_cast<long long>(set.size()));
            for (int element = 1; element <= set.t; ++element) {
                ++selector_checks;
                const HalfExpPoly rewritten = halfspace_form(enum_base, set.topes, element);
                tally.count("enumerator/" + to_string(enum_base) + "/element_" +
                                std::to_string(element),
                            rewritten == direct);
            }
            const std::size_t cycle_cap = std::min(options.enumerator_cycle_cap, cycles.size());
            for (std::size_t c = 0; c < cycle_cap; ++c) {
                const auto& vertices = cycles[c].vertices;
                const HalfExpPoly cycle_direct = distance_enumerator(enum_base, vertices);
                for (std::size_t s = 0; s < vertices.size(); ++s) {
                    std::vector<Tope> window;
                    for (int k = 0; k < cycles[c].t; ++k)
                        window.push_back(vertices[(s + static_cast<std::size_t>(k)) %
                                                  vertices.size()]);
                    ++window_checks;
                    const HalfExpPoly rewritten = halfspace_form(enum_base, vertices, window);
                    tally.count("enumerator/" + to_string(enum_base) + "/cycle_" +
                                    std::to_string(c) + "/window_" + std::to_string(s),
                                rewritten == cycle_direct);
                }
            }
        }
        doc["enumerator"] = {{"bases", base_indices.size()},
                             {"selector_checks", selector_checks},
                             {"window_checks", window_checks},
                             {"failures", tally.failures - before}};
    }

    // two-cycle reports over all pairs, or a seeded sample above the cap
    if (cycles.size() >= 2) {
        std::vector<std::pair<std::size_t, std::size_t>> pairs;
        const std::size_t total_pairs = cycles.size() * (cycles.size() - 1) / 2;
        if (total_pairs <= options.pair_sample) {
            for (std::size_t a = 0; a < cycles.size(); ++a)
                for (std::size_t b = a + 1; b < cycles.size(); ++b) pairs.emplace_back(a, b);
        } else {
            while (pairs.size() < options.pair_sample) {
                const std::size_t a = static_cast<std::size_t>(rng() % cycles.size());
                const std::size_t b = static_cast<std::size_t>(rng() % cycles.size());
                if (a != b) pairs.emplace_back(std::min(a, b), std::max(a, b));
            }
        }
        const std::size_t before = tally.failures;
        for (const auto& [a, b] : pairs) {
            const DistanceVector za = distance_vector(cycles[a], base);
            const DistanceVector zb = distance_vector(cycles[b], base);
            const TwoCycleReport report = two_cycle_analysis(za, zb, options.tolerance);
            tally.absorb("two_cycle/" + std::to_string(a) + "_" + std::to_string(b),
                         report.identities);
        }
        doc["two_cycle"] = {{"pairs", pairs.size()},
                            {"sampled", total_pairs > options.pair_sample},
                            {"failures", tally.failures - before}};
    }

    // ground-set level identities
    {
        json global = json::array();
        const IdentityReport b_report = verify_b_spectrum(set.t, options.tolerance);
        tally.absorb("global", b_report);
        for (auto& item : identity_json(b_report)) global.push_back(std::move(item));

        IdentityReport diag_report;
        if (!cycles.empty()) {
            const DistanceVector z0 = distance_vector(cycles.front(), base);
            diag_report = verify_diagonalization(set.t, 1e-9, &z0);
        } else {
            diag_report = verify_diagonalization(set.t, 1e-9);
        }
        tally.absorb("global", diag_report);
        for (auto& item : identity_json(diag_report)) global.push_back(std::move(item));
        doc["global_identities"] = std::move(global);
    }

    doc["summary"] = {{"checks", tally.checks},
                      {"failures", tally.failures},
                      {"pass", out.validation_ok && tally.failures == 0}};
    out.checks = tally.checks;
    out.failures = tally.failures;
    out.failure_lines = std::move(tally.failed);
    out.json_text = doc.dump(2);
    return out;
}

CampaignReport run_cycle_campaign(const std::vector<Tope>& vertices,
                                  const CampaignOptions& options) {
    CampaignReport out;
    Tally tally;
    json doc;
    doc["kind"] = "cycle";

    const ValidationReport validation = validate_cycle(vertices);
    doc["validation"] = validation_json(validation);
    out.validation_ok = validation.overall();
    if (!out.validation_ok) {
        doc["summary"] = {{"checks", 0}, {"failures", 0}, {"pass", false}};
        out.json_text = doc.dump(2);
        return out;
    }

    const int t = static_cast<int>(vertices.size() / 2);
    doc["t"] = t;
    SymmetricCycle cycle;
    cycle.t = t;
    cycle.vertices = vertices;
    for (std::size_t j = 0; j < vertices.size(); ++j) {
        const auto sep = separation_set(vertices[j], vertices[(j + 1) % vertices.size()]);
        cycle.flip_order.push_back(sep.front());
    }

    const Tope base = options.base.value_or(positive_tope(t));
    json cycle_entries = json::array();
    cycle_entries.push_back(per_cycle_suite(cycle, 0, base, options.tolerance, tally));
    doc["cycles"] = std::move(cycle_entries);

    // the cycle's own vertices serve as the tope universe for the
    // decomposition sweep
    {
        const BasisSolver solver(cycle);
        const std::size_t before = tally.failures;
        for (const auto& tope : vertices) {
            const std::string where = "decomposition/" + to_string(tope);
            const Committee q = solver.decompose(tope);
            tally.count(where + "/sum", sums_to(q.members, tope));
            tally.count(where + "/odd", q.cardinality() % 2 == 1);
            const DistanceVector z_tope = distance_vector(cycle, tope);
            tally.count(where + "/spectral_cardinality",
                        rounds_to(decomposition_card_spectral(z_tope),
                                  static_cast<long long>(q.cardinality()), options.tolerance));
        }
        doc["decomposition"] = {{"pairs", vertices.size()},
                                {"failures", tally.failures - before}};
    }

    doc["summary"] = {{"checks", tally.checks},
                      {"failures", tally.failures},
                      {"pass", out.validation_ok && tally.failures == 0}};
    out.checks = tally.checks;
    out.failures = tally.failures;
    out.failure_lines = std::move(tally.failed);
    out.json_text = doc.dump(2);
    return out;
}

}  // namespace cyclotope
