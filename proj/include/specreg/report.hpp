#pragma once

#include <string>

#include <json.hpp>

#include "specreg/decompose.hpp"
#include "specreg/pipeline.hpp"
#include "specreg/regularize.hpp"
#include "specreg/spectral.hpp"

namespace specreg::report {

using json = nlohmann::ordered_json;

/// Bumped on any incompatible change to a report layout; see schema/.
inline constexpr int kSchemaVersion = 1;

/// %.12g rendering used for CSV cells; "inf"/"-inf"/"nan" for non-finite values.
std::string format_number(double v);

/// Copy of j with every floating-point number rounded to 12 significant digits
/// and non-finite numbers replaced by null.
json rounded(const json& j);

/// Two-space indented JSON of rounded(j) with a trailing newline.
std::string emit_json(const json& j);

json to_json(const Certificate& c);
json to_json(const DecomposeStep& s);
json to_json(const DecomposeTrace& t);
json to_json(const RegularityReport& r);
json to_json(const AuditRecord& a);
json to_json(const Theorem15Check& t);

/// Summary of a subgraph: order, size and its vertices in input labels.
json subgraph_json(const Subgraph& s);

json spectral_report(const Graph& g, const EigenPair& pair);
json audit_report(const AuditRecord& a);
json decompose_report(const DecomposeResult& r);
json regularize_report(const RegularizeResult& r);
json pipeline_report(const PipelineResult& r);
json verify_report(const Graph& g, double K, const RegularityWitness& w);

/// One row per decompose step; column order fixed by kDecomposeColumns.
std::string decompose_csv(const DecomposeTrace& t);
extern const char* const kDecomposeColumns;

/// Header plus one row of the top-level scalar fields of a report object.
std::string flat_csv(const json& j);

}  // namespace specreg::report
