#pragma once

#include <string>
#include <string_view>

#include "json.hpp"
#include "latsens/boolfn.hpp"
#include "latsens/bounds.hpp"
#include "latsens/lattice.hpp"
#include "latsens/reductions.hpp"
#include "latsens/search.hpp"
#include "latsens/truth_table.hpp"

namespace latsens {

using Json = nlohmann::ordered_json;

// --- truth-table text format ------------------------------------------
// Header line "n=<k>", then one hex line for the 2^k output bits (most
// significant digit first; bit j = output at input index j):
//   n=2
//   8
std::string write_truth_table(const TruthTable& f);
TruthTable read_truth_table(std::string_view text);
TruthTable load_truth_table(const std::string& path);
void save_truth_table(const TruthTable& f, const std::string& path);

// --- coloring spec files (JSON, axes 0-based) --------------------------
//   {"kind":"sliced","d":6,"slices":[{"axis":0,"c":3,"zeros":[1]},...]}
//   {"kind":"mirror-periodic","b":[1,1,2],"colors":"<hex>"}   (1 = Blue,
//       row-major over the (b_i+1) box, first coordinate slowest)
//   {"kind":"repeated","inner":{...},"copies":2}
//   {"kind":"doubled","inner":{...}}
//   {"kind":"reflected","inner":{...},"signs":[1,-1,...]}
Json coloring_to_spec(const Coloring& c);
ColoringPtr coloring_from_spec(const Json& spec);
std::string write_coloring_spec(const Coloring& c);
ColoringPtr read_coloring_spec(std::string_view text);
ColoringPtr load_coloring_spec(const std::string& path);

std::string fingerprint_of(const TruthTable& f);   // "fnv1a:<16 hex>"
std::string fingerprint_of(const Coloring& c);

// --- report fragments ---------------------------------------------------
// Lattice axes and variable indices are 1-based in all report JSON; file
// formats above stay 0-based.
Json to_json(const MeasureReport& m);
Json to_json(const SensitivitySummary& s);
Json to_json(const ColoringReport& r);
Json to_json(const MinWidthResult& w);
Json to_json(const NontrivialityReport& n);
Json to_json(const KKCheckReport& r);
Json to_json(const LatticeLowerBoundReport& r);
Json to_json(const BoundCheckReport& r);
Json to_json(const RepeatedBoundReport& r);
Json to_json(const ReductionCertificate& c);
Json to_json(const SeparationRecord& r);
Json to_json(const ScanResult& r);
Json to_json(const Inequality& q);

ReductionCertificate certificate_from_json(const Json& j);
std::string write_certificate(const ReductionCertificate& c);
ReductionCertificate read_certificate(std::string_view text);

// Line-delimited records, one JSON object per line, stable field order.
std::string records_to_jsonl(const ScanResult& r);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, std::string_view text);

}  // namespace latsens
