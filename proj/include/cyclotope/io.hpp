#pragma once

// File formats:
//   arrangement (JSON): {"d": int, "vectors": [["p/q", ...], ...]} with
//     rationals as "p/q" or integer strings (bare JSON integers accepted);
//   tope list (text): one tope per line over {+,-}, '#' starts a comment;
//   cycle (JSON): {"t": int, "vertices": ["-++", ...]};
//   spectrum (CSV): k, re, im, magnitude_squared, sin2_weight;
//   identity reports (JSON): [{name, value, reference, residual, pass}].

#include <iosfwd>
#include <string>
#include <vector>

#include "cyclotope/arrangement.hpp"
#include "cyclotope/cycle.hpp"
#include "cyclotope/identities.hpp"

namespace cyclotope {

Arrangement read_arrangement(std::istream& in);
Arrangement read_arrangement_file(const std::string& path);
void write_arrangement(std::ostream& out, const Arrangement& arrangement);

std::vector<Tope> read_tope_list(std::istream& in);
std::vector<Tope> read_tope_list_file(const std::string& path);
void write_tope_list(std::ostream& out, std::span<const Tope> topes);

// {"t": ..., "vertices": [...]} -- the vertex sequence of a candidate cycle.
std::vector<Tope> read_cycle(std::istream& in);
std::vector<Tope> read_cycle_file(const std::string& path);
void write_cycle(std::ostream& out, const SymmetricCycle& cycle);

void write_spectrum_csv(std::ostream& out, const Spectrum& spectrum);

std::string identity_report_json(std::span<const IdentityReport> reports);

}  // namespace cyclotope
