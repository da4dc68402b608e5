#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "topdyn/findyn.hpp"
#include "topdyn/fintop.hpp"
#include "topdyn/harness.hpp"

namespace topdyn::io {

using nlohmann::json;

// Space file: {"points": n, "min_nbhd": [[...],...]}
// System file: the same plus "map": [f(0),...], optional "labels": [...]
// Basis file: {"sets": [[...],...]}

json space_to_json(const fintop::FinSpace& s);
fintop::FinSpace space_from_json(const json& j);

json system_to_json(const findyn::FinSystem& s);
findyn::FinSystem system_from_json(const json& j);

findyn::FinSystem load_system_file(const std::string& path);
/// Accepts either a bare space file or a system file (the map is ignored).
fintop::FinSpace load_space_file(const std::string& path);
fintop::DensityBasis load_basis_file(const std::string& path, std::uint32_t n);

json report_to_json(const findyn::PropertyReport& r);
/// Inverse of report_to_json: parsing reproduces the verdict data exactly.
findyn::PropertyReport report_from_json(const json& j, std::uint32_t n);

json classification_to_json(const findyn::Classification& c);
json theorem_results_to_json(const std::vector<harness::TheoremResult>& results);

std::string render_report_text(const findyn::FinSystem& sys, const findyn::PropertyReport& r);
std::string render_classification_text(const findyn::FinSystem& sys,
                                       const findyn::Classification& c);

}  // namespace topdyn::io
