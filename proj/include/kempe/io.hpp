#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "kempe/coloring.hpp"
#include "kempe/degeneracy.hpp"
#include "kempe/fourcolor.hpp"
#include "kempe/patterns.hpp"
#include "kempe/reconfig.hpp"
#include "kempe/topology.hpp"
#include "kempe/torus_graph.hpp"
#include "kempe/wsk.hpp"

namespace kempe::io {

using Json = nlohmann::ordered_json;

// Readers throw Error(ParseError) on malformed input. Vertex ids are 0-based;
// colors are 1..k. Hashes are written as 16 lowercase hex digits.

Json to_json(const GraphParams& params);
GraphParams params_from_json(const Json& j);

Json to_json(const Coloring& phi);
Coloring coloring_from_json(const Json& j);

Json to_json(const Certificate& cert);
Certificate certificate_from_json(const Json& j);

Json to_json(const Template& t);
Template template_from_json(const Json& j);

Json to_json(const ClassReport& report);
ClassReport class_report_from_json(const Json& j);

Json to_json(const FourColorVerdict& verdict);
Json to_json(const Pattern& pattern);
Json to_json(const EdgeWidth& ew);
Json to_json(const ChainStats& stats);

/// Rotation lists and parameters accompanying a DIMACS export.
Json rotation_sidecar(const TorusGraph& g);

Json read_json(const std::filesystem::path& path);
/// Writes `j` with two-space indentation and a trailing newline.
void write_json(const std::filesystem::path& path, const Json& j);
std::string dump(const Json& j);

}  // namespace kempe::io
