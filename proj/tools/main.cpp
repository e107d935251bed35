// Command-line front end: ingest arrangements, tope lists or cycle files,
// enumerate symmetric cycles, compute committees and decompositions, emit
// spectra, and run full identity-verification campaigns.
//
// Exit codes: 0 pass, 1 domain validation failure, 2 identity violation,
// 3 input or usage error.

#include <cmath>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "cyclotope/arrangement.hpp"
#include "cyclotope/campaign.hpp"
#include "cyclotope/committee.hpp"
#include "cyclotope/cycle.hpp"
#include "cyclotope/identities.hpp"
#include "cyclotope/io.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace cyclotope;

constexpr int kExitPass = 0;
constexpr int kExitValidation = 1;
constexpr int kExitIdentity = 2;
constexpr int kExitUsage = 3;

struct Options {
    std::string input;
    std::string kind = "auto";
    std::size_t limit = 0;  // cycles; 0 = all
    double tolerance = kDefaultTolerance;
    std::uint64_t seed = 2024;
    std::string format;  // "", "text", "json", "csv"
    std::string output;
    std::string base;          // tope string, default all-plus
    std::size_t cycle_index = 0;
    std::size_t cycle_index2 = 1;
    std::string tope;
};

enum class InputKind { Arrangement, Topes, Cycle };

struct LoadedInput {
    InputKind kind = InputKind::Topes;
    std::optional<Arrangement> arrangement;
    std::vector<Tope> topes;  // tope list, or cycle vertex sequence
};

InputKind detect_kind(const Options& options) {
    if (options.kind == "arrangement") return InputKind::Arrangement;
    if (options.kind == "topes") return InputKind::Topes;
    if (options.kind == "cycle") return InputKind::Cycle;
    if (options.kind != "auto") throw ParseError("unknown input kind '" + options.kind + "'");

    std::ifstream in(options.input);
    if (!in) throw ParseError("cannot open '" + options.input + "'");
    char first = 0;
    in >> first;
    if (first != '{') return InputKind::Topes;
    in.seekg(0);
    json doc;
    try {
        doc = json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(e.what());
    }
    if (doc.contains("vectors")) return InputKind::Arrangement;
    if (doc.contains("vertices")) return InputKind::Cycle;
    throw ParseError("cannot tell arrangement from cycle: no \"vectors\" or \"vertices\" key");
}

LoadedInput load_input(const Options& options) {
    LoadedInput loaded;
    loaded.kind = detect_kind(options);
    switch (loaded.kind) {
        case InputKind::Arrangement:
            loaded.arrangement = read_arrangement_file(options.input);
            break;
        case InputKind::Topes:
            loaded.topes = read_tope_list_file(options.input);
            break;
        case InputKind::Cycle:
            loaded.topes = read_cycle_file(options.input);
            break;
    }
    return loaded;
}

// The tope set behind an arrangement or tope-list input. Malformed lists
// (inconsistent lengths) surface as ParseError -> usage exit; arrangement
// domain defects propagate as domain errors.
TopeSet tope_set_of(const LoadedInput& loaded) {
    if (loaded.kind == InputKind::Arrangement) return topes_from_arrangement(*loaded.arrangement);
    try {
        return TopeSet::from_topes(loaded.topes);
    } catch (const LengthMismatch& e) {
        throw ParseError(std::string("tope list: ") + e.what());
    }
}

Tope base_tope(const Options& options, int t) {
    if (options.base.empty()) return positive_tope(t);
    Tope base = parse_tope(options.base);
    if (base.t() != t)
        throw ParseError("base tope length " + std::to_string(base.t()) + ", expected " +
                         std::to_string(t));
    return base;
}

// stdout by default, or the --output file
class Sink {
public:
    explicit Sink(const std::string& path) {
        if (!path.empty()) {
            file_.open(path);
            if (!file_) throw ParseError("cannot write '" + path + "'");
        }
    }
    std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

private:
    std::ofstream file_;
};

void print_validation(std::ostream& out, const ValidationReport& report) {
    for (const auto& check : report.checks) {
        out << (check.pass ? "  [ok]   " : "  [FAIL] ") << check.name;
        if (!check.witness.empty()) out << "  (" << check.witness << ")";
        out << "\n";
    }
    out << (report.overall() ? "validation passed" : "validation FAILED") << "\n";
}

json cycle_json(const SymmetricCycle& cycle, const DistanceVector& z, std::size_t index) {
    json entry;
    entry["index"] = index;
    json vertices = json::array();
    for (const auto& vertex : cycle.vertices) vertices.push_back(to_string(vertex));
    entry["vertices"] = std::move(vertices);
    entry["flip_order"] =
        std::vector<int>(cycle.flip_order.begin(), cycle.flip_order.begin() + cycle.t);
    entry["distance_vector"] = z.values;
    return entry;
}

SymmetricCycle replayed_cycle(const std::vector<Tope>& vertices) {
    const ValidationReport report = validate_cycle(vertices);
    if (!report.overall()) {
        std::ostringstream detail;
        print_validation(detail, report);
        throw Error("cycle input invalid:\n" + detail.str());
    }
    SymmetricCycle cycle;
    cycle.t = static_cast<int>(vertices.size() / 2);
    cycle.vertices = vertices;
    for (std::size_t j = 0; j < vertices.size(); ++j)
        cycle.flip_order.push_back(
            separation_set(vertices[j], vertices[(j + 1) % vertices.size()]).front());
    return cycle;
}

// Cycles for commands addressing them by index: the replayed cycle for
// cycle inputs, the canonical enumeration otherwise.
std::vector<SymmetricCycle> cycles_of(const LoadedInput& loaded, const Options& options) {
    if (loaded.kind == InputKind::Cycle) return {replayed_cycle(loaded.topes)};
    const TopeSet set = tope_set_of(loaded);
    const ValidationReport report = validate_tope_set(set);
    if (!report.overall()) {
        std::ostringstream detail;
        print_validation(detail, report);
        throw Error("tope set invalid:\n" + detail.str());
    }
    return find_symmetric_cycles(set, options.limit);
}

int cmd_validate(const Options& options) {
    const LoadedInput loaded = load_input(options);
    Sink sink(options.output);
    if (loaded.kind == InputKind::Cycle) {
        const ValidationReport report = validate_cycle(loaded.topes);
        print_validation(sink.stream(), report);
        return report.overall() ? kExitPass : kExitValidation;
    }
    const TopeSet set = tope_set_of(loaded);
    const ValidationReport report = validate_tope_set(set);
    sink.stream() << "t = " << set.t << ", topes = " << set.size() << "\n";
    print_validation(sink.stream(), report);
    return report.overall() ? kExitPass : kExitValidation;
}

int cmd_topes(const Options& options) {
    const LoadedInput loaded = load_input(options);
    if (loaded.kind == InputKind::Cycle) throw ParseError("topes wants an arrangement or tope list");
    const TopeSet set = tope_set_of(loaded);
    Sink sink(options.output);
    if (options.format == "json") {
        json doc;
        doc["t"] = set.t;
        json topes = json::array();
        for (const auto& tope : set.topes) topes.push_back(to_string(tope));
        doc["topes"] = std::move(topes);
        sink.stream() << doc.dump(2) << "\n";
    } else {
        write_tope_list(sink.stream(), set.topes);
    }
    return kExitPass;
}

int cmd_cycles(const Options& options) {
    const LoadedInput loaded = load_input(options);
    if (loaded.kind == InputKind::Cycle) throw ParseError("cycles wants an arrangement or tope list");
    const std::vector<SymmetricCycle> cycles = cycles_of(loaded, options);
    Sink sink(options.output);
    if (cycles.empty()) {
        sink.stream() << "0 cycle(s)\n";
        return kExitValidation;
    }
    const Tope base = base_tope(options, cycles.front().t);

    if (options.format == "json") {
        json doc = json::array();
        for (std::size_t i = 0; i < cycles.size(); ++i)
            doc.push_back(cycle_json(cycles[i], distance_vector(cycles[i], base), i));
        sink.stream() << doc.dump(2) << "\n";
        return kExitPass;
    }
    for (std::size_t i = 0; i < cycles.size(); ++i) {
        const auto& cycle = cycles[i];
        sink.stream() << "cycle " << i << ": start " << to_string(cycle.vertices.front())
                      << ", flips";
        for (int k = 0; k < cycle.t; ++k)
            sink.stream() << " " << cycle.flip_order[static_cast<std::size_t>(k)];
        sink.stream() << ", z = (";
        const DistanceVector z = distance_vector(cycle, base);
        for (std::size_t j = 0; j < z.length(); ++j)
            sink.stream() << (j ? "," : "") << z.values[j];
        sink.stream() << ")\n";
    }
    sink.stream() << cycles.size() << " cycle(s)\n";
    return kExitPass;
}

int cmd_committee(const Options& options) {
    const LoadedInput loaded = load_input(options);
    const std::vector<SymmetricCycle> cycles = cycles_of(loaded, options);
    Sink sink(options.output);
    if (cycles.empty()) {
        sink.stream() << "0 cycle(s)\n";
        return kExitValidation;
    }
    const Tope base = base_tope(options, cycles.front().t);

    json doc = json::array();
    for (std::size_t i = 0; i < cycles.size(); ++i) {
        const Committee committee = min_elements(cycles[i], base);
        if (options.format == "json") {
            json entry;
            entry["cycle"] = i;
            entry["base"] = to_string(base);
            entry["positions"] = committee.positions;
            json members = json::array();
            for (const auto& member : committee.members) members.push_back(to_string(member));
            entry["members"] = std::move(members);
            entry["cardinality"] = committee.cardinality();
            doc.push_back(std::move(entry));
        } else {
            sink.stream() << "cycle " << i << ": committee of " << committee.cardinality()
                          << " at positions [";
            for (std::size_t k = 0; k < committee.positions.size(); ++k)
                sink.stream() << (k ? "," : "") << committee.positions[k];
            sink.stream() << "]:";
            for (const auto& member : committee.members) sink.stream() << " " << to_string(member);
            sink.stream() << "\n";
        }
    }
    if (options.format == "json") sink.stream() << doc.dump(2) << "\n";
    return kExitPass;
}

int cmd_decompose(const Options& options) {
    if (options.tope.empty()) throw ParseError("decompose needs --tope");
    const LoadedInput loaded = load_input(options);
    const std::vector<SymmetricCycle> cycles = cycles_of(loaded, options);
    if (options.cycle_index >= cycles.size()) throw BadIndex(options.cycle_index, cycles.size());
    const SymmetricCycle& cycle = cycles[options.cycle_index];

    Tope tope = parse_tope(options.tope);
    if (tope.t() != cycle.t)
        throw ParseError("tope length " + std::to_string(tope.t()) + ", expected " +
                         std::to_string(cycle.t));

    const BasisSolver solver(cycle);
    const RatVector coefficients = solver.coefficients(tope);
    const Committee committee = solver.decompose(tope);
    const std::vector<int> indicator = indicator_vector(committee, cycle.length());

    Sink sink(options.output);
    json doc;
    doc["cycle"] = options.cycle_index;
    doc["tope"] = to_string(tope);
    json coeffs = json::array();
    for (const auto& c : coefficients) coeffs.push_back(to_string(c));
    doc["coefficients"] = std::move(coeffs);
    doc["positions"] = committee.positions;
    json members = json::array();
    for (const auto& member : committee.members) members.push_back(to_string(member));
    doc["members"] = std::move(members);
    doc["indicator"] = indicator;
    doc["cardinality"] = committee.cardinality();
    sink.stream() << doc.dump(2) << "\n";
    return kExitPass;
}

int cmd_spectrum(const Options& options) {
    const LoadedInput loaded = load_input(options);
    const std::vector<SymmetricCycle> cycles = cycles_of(loaded, options);
    if (options.cycle_index >= cycles.size()) throw BadIndex(options.cycle_index, cycles.size());
    const SymmetricCycle& cycle = cycles[options.cycle_index];

    Tope reference = options.tope.empty() ? base_tope(options, cycle.t) : parse_tope(options.tope);
    if (reference.t() != cycle.t)
        throw ParseError("tope length " + std::to_string(reference.t()) + ", expected " +
                         std::to_string(cycle.t));

    const DistanceVector z = distance_vector(cycle, reference);
    const Spectrum spectrum = dft(z);
    Sink sink(options.output);
    if (options.format == "json") {
        json doc = json::array();
        for (std::size_t k = 0; k < spectrum.length(); ++k) {
            const double s =
                std::sin(std::numbers::pi * static_cast<double>(k) / spectrum.t);
            json row;
            row["k"] = k;
            row["re"] = spectrum.values[k].real();
            row["im"] = spectrum.values[k].imag();
            row["magnitude_squared"] = spectrum.magnitude_squared(k);
            row["sin2_weight"] = s * s;
            doc.push_back(std::move(row));
        }
        sink.stream() << doc.dump(2) << "\n";
    } else {
        write_spectrum_csv(sink.stream(), spectrum);
    }
    return kExitPass;
}

int cmd_verify(const Options& options) {
    const LoadedInput loaded = load_input(options);
    CampaignOptions campaign_options;
    campaign_options.tolerance = options.tolerance;
    campaign_options.seed = options.seed;
    campaign_options.cycle_limit = options.limit;

    CampaignReport report;
    if (loaded.kind == InputKind::Cycle) {
        if (!options.base.empty())
            campaign_options.base = base_tope(options, static_cast<int>(loaded.topes.size() / 2));
        report = run_cycle_campaign(loaded.topes, campaign_options);
    } else {
        const TopeSet set = tope_set_of(loaded);
        if (!options.base.empty()) campaign_options.base = base_tope(options, set.t);
        report = run_campaign(set, campaign_options);
    }

    Sink sink(options.output);
    sink.stream() << report.json_text << "\n";
    std::cerr << "verify: " << report.checks << " checks, " << report.failures << " failures"
              << (report.validation_ok ? "" : ", validation FAILED") << "\n";
    for (std::size_t i = 0; i < report.failure_lines.size() && i < 20; ++i)
        std::cerr << "  failed: " << report.failure_lines[i] << "\n";
    if (!report.validation_ok) return kExitValidation;
    return report.failures == 0 ? kExitPass : kExitIdentity;
}

int cmd_two_cycle(const Options& options) {
    const LoadedInput loaded = load_input(options);
    if (loaded.kind == InputKind::Cycle)
        throw ParseError("two-cycle wants an arrangement or tope list");
    const std::vector<SymmetricCycle> cycles = cycles_of(loaded, options);
    if (options.cycle_index >= cycles.size()) throw BadIndex(options.cycle_index, cycles.size());
    if (options.cycle_index2 >= cycles.size())
        throw BadIndex(options.cycle_index2, cycles.size());

    const Tope base = base_tope(options, cycles.front().t);
    const DistanceVector z_first = distance_vector(cycles[options.cycle_index], base);
    const DistanceVector z_second = distance_vector(cycles[options.cycle_index2], base);
    const TwoCycleReport report = two_cycle_analysis(z_first, z_second, options.tolerance);

    Sink sink(options.output);
    json doc;
    doc["cycle_first"] = options.cycle_index;
    doc["cycle_second"] = options.cycle_index2;
    doc["difference"] = report.difference;
    doc["total"] = report.total;
    doc["exact_combined"] = report.exact_combined;
    doc["spectral_combined"] = report.spectral_combined;
    json checks = json::array();
    for (const auto& check : report.identities.checks) {
        json item;
        item["name"] = check.name;
        item["value"] = check.value;
        item["reference"] = check.reference;
        item["residual"] = check.residual;
        item["pass"] = check.pass;
        checks.push_back(std::move(item));
    }
    doc["checks"] = std::move(checks);
    doc["pass"] = report.pass();
    sink.stream() << doc.dump(2) << "\n";
    return report.pass() ? kExitPass : kExitIdentity;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"symmetric cycles, critical committees and distance-signal spectra\n"
                 "over tope graphs of simple acyclic oriented matroids"};
    app.require_subcommand(1);

    Options options;
    auto add_common = [&](CLI::App* cmd, bool wants_limit = true) {
        cmd->add_option("-i,--input", options.input, "input file")->required();
        cmd->add_option("-k,--kind", options.kind,
                        "input kind: arrangement | topes | cycle | auto");
        if (wants_limit) cmd->add_option("-l,--limit", options.limit, "cycle limit, 0 = all");
        cmd->add_option("--tolerance", options.tolerance, "identity tolerance");
        cmd->add_option("--seed", options.seed, "sampling seed");
        cmd->add_option("-f,--format", options.format, "output format: text | json | csv");
        cmd->add_option("-o,--output", options.output, "output file (default stdout)");
        cmd->add_option("-b,--base", options.base, "base tope, e.g. +-+ (default all-plus)");
    };

    auto* validate = app.add_subcommand("validate", "validate a tope set or cycle file");
    add_common(validate, false);
    auto* topes = app.add_subcommand("topes", "list the topes of an arrangement");
    add_common(topes, false);
    auto* cycles = app.add_subcommand("cycles", "enumerate canonical symmetric cycles");
    add_common(cycles);
    auto* committee = app.add_subcommand("committee", "critical committees per cycle");
    add_common(committee);
    auto* decompose = app.add_subcommand("decompose", "expand a tope over a cycle basis");
    add_common(decompose);
    decompose->add_option("--cycle", options.cycle_index, "cycle index");
    decompose->add_option("--tope", options.tope, "tope to decompose, e.g. -++");
    auto* spectrum = app.add_subcommand("spectrum", "distance-signal spectrum of a cycle");
    add_common(spectrum);
    spectrum->add_option("--cycle", options.cycle_index, "cycle index");
    spectrum->add_option("--tope", options.tope, "reference tope for the distance signal");
    auto* verify = app.add_subcommand("verify", "run the full identity campaign");
    add_common(verify);
    auto* two_cycle = app.add_subcommand("two-cycle", "difference/sum analysis of two cycles");
    add_common(two_cycle);
    two_cycle->add_option("--cycle", options.cycle_index, "first cycle index");
    two_cycle->add_option("--cycle2", options.cycle_index2, "second cycle index");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (validate->parsed()) return cmd_validate(options);
        if (topes->parsed()) return cmd_topes(options);
        if (cycles->parsed()) return cmd_cycles(options);
        if (committee->parsed()) return cmd_committee(options);
        if (decompose->parsed()) return cmd_decompose(options);
        if (spectrum->parsed()) return cmd_spectrum(options);
        if (verify->parsed()) return cmd_verify(options);
        if (two_cycle->parsed()) return cmd_two_cycle(options);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const BadIndex& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const NoCycleFound& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
