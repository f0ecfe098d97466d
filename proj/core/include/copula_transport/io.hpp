#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "copula_transport/cluster.hpp"
#include "copula_transport/copula.hpp"
#include "copula_transport/dependence.hpp"
#include "copula_transport/panel.hpp"
#include "copula_transport/signature.hpp"

namespace copula_transport {

using Json = nlohmann::ordered_json;

// Header row plus one row per observation; comma separated, decimal-point
// floats. Ragged rows and non-numeric cells raise DataError naming the
// source and the 1-based line.
struct CsvPanel {
  std::vector<std::string> header;
  Panel panel;
};

CsvPanel parse_panel_csv(std::string_view text, std::string_view source);
CsvPanel read_panel_csv(const std::filesystem::path& path);

// Shortest representation that parses back to the same double.
std::string format_double(double value);

void write_matrix_csv(std::ostream& out, const std::vector<std::string>& header,
                      std::size_t length, std::size_t dimension,
                      std::span<const double> column_major);
void write_panel_csv(std::ostream& out, const std::vector<std::string>& header,
                     const Panel& panel);
void write_copula_csv(std::ostream& out, const std::vector<std::string>& header,
                      const CopulaSample& sample);
// Default header "x1".."xd".
std::vector<std::string> default_header(std::size_t dimension);

// {"dimension": d, "resolution": m, "atoms": [[[c_1, ..., c_d], w], ...]}
Json signature_to_json(const Signature& signature);
Signature signature_from_json(const Json& json);

// {name: {"kind": "monotone", "orientation": [1, -1]},
//  name: {"kind": "pattern", "pattern": "circle", "sample_size": M, "seed": s},
//  name: {"kind": "explicit", "signature": {...}}}
std::vector<TargetSpec> target_specs_from_json(const Json& json);
Json target_specs_to_json(const std::vector<TargetSpec>& specs);

Json distance_matrix_to_json(const DistanceMatrix& dm);
DistanceMatrix distance_matrix_from_json(const Json& json);

Json dendrogram_to_json(const Dendrogram& dendrogram);

// Reads a whole file; DataError when it cannot be opened.
std::string read_text_file(const std::filesystem::path& path);
Json read_json_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

}  // namespace copula_transport
