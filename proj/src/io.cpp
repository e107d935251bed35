#include "cyclotope/io.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include <json.hpp>

namespace cyclotope {

using json = nlohmann::ordered_json;

namespace {

json parse_json(std::istream& in) {
    try {
        return json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(e.what());
    }
}

std::ifstream open_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    return in;
}

}  // namespace

Arrangement read_arrangement(std::istream& in) {
    const json doc = parse_json(in);
    if (!doc.is_object() || !doc.contains("d") || !doc.contains("vectors"))
        throw ParseError("arrangement wants an object with \"d\" and \"vectors\"");
    Arrangement arrangement;
    if (!doc["d"].is_number_integer()) throw ParseError("\"d\" must be an integer");
    arrangement.d = doc["d"].get<int>();
    if (arrangement.d < 1) throw ParseError("\"d\" must be positive");
    if (!doc["vectors"].is_array() || doc["vectors"].empty())
        throw ParseError("\"vectors\" must be a nonempty array");
    for (const auto& row : doc["vectors"]) {
        if (!row.is_array() || static_cast<int>(row.size()) != arrangement.d)
            throw ParseError("every vector needs exactly d entries");
        RatVector values;
        for (const auto& entry : row) {
            if (entry.is_string())
                values.push_back(parse_rational(entry.get<std::string>()));
            else if (entry.is_number_integer())
                values.push_back(Rational(BigInt(entry.get<long long>())));
            else
                throw ParseError("vector entries must be rational strings or integers");
        }
        arrangement.vectors.push_back(std::move(values));
    }
    return arrangement;
}

Arrangement read_arrangement_file(const std::string& path) {
    auto in = open_file(path);
    return read_arrangement(in);
}

void write_arrangement(std::ostream& out, const Arrangement& arrangement) {
    json doc;
    doc["d"] = arrangement.d;
    json rows = json::array();
    for (const auto& vector : arrangement.vectors) {
        json row = json::array();
        for (const auto& value : vector) row.push_back(to_string(value));
        rows.push_back(std::move(row));
    }
    doc["vectors"] = std::move(rows);
    out << doc.dump(2) << "\n";
}

std::vector<Tope> read_tope_list(std::istream& in) {
    std::vector<Tope> topes;
    std::string line;
    std::size_t line_number = 0;
    while (std::getline(in, line)) {
        ++line_number;
        const auto comment = line.find('#');
        if (comment != std::string::npos) line.erase(comment);
        // trim whitespace
        const auto from = line.find_first_not_of(" \t\r");
        if (from == std::string::npos) continue;
        const auto to = line.find_last_not_of(" \t\r");
        const std::string body = line.substr(from, to - from + 1);
        try {
            topes.push_back(parse_tope(body));
        } catch (const Error& e) {
            throw ParseError("line " + std::to_string(line_number) + ": " + e.what());
        }
    }
    if (topes.empty()) throw ParseError("no topes in input");
    return topes;
}

std::vector<Tope> read_tope_list_file(const std::string& path) {
    auto in = open_file(path);
    return read_tope_list(in);
}

void write_tope_list(std::ostream& out, std::span<const Tope> topes) {
    for (const auto& tope : topes) out << to_string(tope) << "\n";
}

std::vector<Tope> read_cycle(std::istream& in) {
    const json doc = parse_json(in);
    if (!doc.is_object() || !doc.contains("t") || !doc.contains("vertices"))
        throw ParseError("cycle wants an object with \"t\" and \"vertices\"");
    if (!doc["t"].is_number_integer()) throw ParseError("\"t\" must be an integer");
    const int t = doc["t"].get<int>();
    if (!doc["vertices"].is_array()) throw ParseError("\"vertices\" must be an array");
    std::vector<Tope> vertices;
    for (const auto& entry : doc["vertices"]) {
        if (!entry.is_string()) throw ParseError("vertices must be sign strings");
        Tope tope = parse_tope(entry.get<std::string>());
        if (tope.t() != t)
            throw ParseError("vertex " + entry.get<std::string>() + " has length " +
                             std::to_string(tope.t()) + ", expected " + std::to_string(t));
        vertices.push_back(std::move(tope));
    }
    if (vertices.empty()) throw ParseError("no vertices in cycle");
    return vertices;
}

std::vector<Tope> read_cycle_file(const std::string& path) {
    auto in = open_file(path);
    return read_cycle(in);
}

void write_cycle(std::ostream& out, const SymmetricCycle& cycle) {
    json doc;
    doc["t"] = cycle.t;
    json vertices = json::array();
    for (const auto& vertex : cycle.vertices) vertices.push_back(to_string(vertex));
    doc["vertices"] = std::move(vertices);
    json flips = json::array();
    for (const int element : cycle.flip_order) flips.push_back(element);
    doc["flip_order"] = std::move(flips);
    out << doc.dump(2) << "\n";
}

void write_spectrum_csv(std::ostream& out, const Spectrum& spectrum) {
    out << "k,re,im,magnitude_squared,sin2_weight\n";
    std::ostringstream buffer;
    buffer.precision(17);
    for (std::size_t k = 0; k < spectrum.length(); ++k) {
        const double s = std::sin(std::numbers::pi * static_cast<double>(k) / spectrum.t);
        buffer.str("");
        buffer << k << "," << spectrum.values[k].real() << "," << spectrum.values[k].imag() << ","
               << spectrum.magnitude_squared(k) << "," << s * s;
        out << buffer.str() << "\n";
    }
}

std::string identity_report_json(std::span<const IdentityReport> reports) {
    json list = json::array();
    for (const auto& report : reports) {
        for (const auto& check : report.checks) {
            json item;
            item["name"] = report.name + "/" + check.name;
            item["value"] = check.value;
            item["reference"] = check.reference;
            item["residual"] = check.residual;
            item["pass"] = check.pass;
            list.push_back(std::move(item));
        }
    }
    return list.dump(2);
}

}  // namespace cyclotope
