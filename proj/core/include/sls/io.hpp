#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "sls/code.hpp"
#include "sls/sim.hpp"
#include "sls/surgery.hpp"

namespace sls {

/// Interchange form: {name, n, width, height, gauge_generators, coordinates}.
/// Coordinates are per-qubit [row, col] pairs and are optional.
nlohmann::json code_to_json(const SubsystemCode& code);
SubsystemCode code_from_json(const nlohmann::json& j);

nlohmann::json analysis_to_json(const CodeAnalysis& analysis);
nlohmann::json merge_report_json(const MergeResult& result, const MergedParamsReport& params,
                                 const std::vector<std::pair<PauliOperator, PauliOperator>>& witnesses);
nlohmann::json teleport_report_json(const TeleportReport& report);

/// Canonical serialization: sorted keys, 2-space indent, trailing newline.
/// Identical inputs give byte-identical files.
std::string dump_report(const nlohmann::json& j);

/// Static SVG diagram: qubit dots, generator polygons grouped by Pauli type,
/// highlighted qubits (e.g. seam ancillas) in a distinct color.
std::string render_svg(const SubsystemCode& code, const std::vector<std::size_t>& highlight = {});

}  // namespace sls
