#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "graphcodes/concatenation.hpp"
#include "graphcodes/graph_metric.hpp"
#include "graphcodes/report.hpp"

namespace graphcodes {

/// Basis file: "count=<m>" followed by m matrix-word blocks in the
/// documented matrix format.
void write_basis_file(std::ostream& os, const std::vector<MatrixWord>& basis);
std::vector<MatrixWord> read_basis_file(std::istream& is);

/// Descriptor record for a constructed code: family, the parameter echo,
/// shape and span metadata, and the relative path of the basis file.
nlohmann::json code_descriptor(const std::string& family, const nlohmann::json& params,
                               const GraphCode& code, const std::string& basis_file);

nlohmann::json layer_json(const ConcatLayer& layer);

/// Rebuilds the code from a descriptor, loading the basis file relative to
/// the descriptor's directory.
GraphCode load_code(const nlohmann::json& descriptor, const std::filesystem::path& descriptor_dir);

nlohmann::json report_json(const DistanceReport& report);

}  // namespace graphcodes
