#pragma once

#include <string>

#include <json.hpp>

#include "kroncode/analyze.hpp"

namespace kron {

using OrderedJson = nlohmann::ordered_json;

// Code files are self-describing: q (plus the modulus for extension fields),
// the family with its parameters, and the parity check entries as canonical
// element codes, row-major.
OrderedJson code_to_json(const CodeSpec& spec);
CodeSpec code_from_json(const OrderedJson& j);

void save_code(const CodeSpec& spec, const std::string& path);
CodeSpec load_code(const std::string& path);

// Machine-readable analysis report. Rationals are emitted as
// [numerator, denominator] in lowest terms with positive denominator;
// arrays are ordered by level ascending. Output is deterministic; timing
// is only included on request so byte-identical reruns stay the default.
OrderedJson report_to_json(const AnalysisReport& rep);
std::string report_to_csv(const AnalysisReport& rep);

void save_report(const AnalysisReport& rep, const std::string& path,
                 const std::string& format);

}  // namespace kron
