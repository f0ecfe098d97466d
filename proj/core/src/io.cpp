#include "copula_transport/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>
#include <system_error>

#include "copula_transport/error.hpp"

namespace copula_transport {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    if (comma == std::string_view::npos) {
      fields.push_back(trim(line.substr(start)));
      return fields;
    }
    fields.push_back(trim(line.substr(start, comma - start)));
    start = comma + 1;
  }
}

std::string where(std::string_view source, std::size_t line) {
  return std::string(source) + ":" + std::to_string(line) + ": ";
}

}  // namespace

CsvPanel parse_panel_csv(std::string_view text, std::string_view source) {
  std::vector<std::string> header;
  std::vector<std::vector<double>> columns;
  std::size_t line_number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view line = trim(text.substr(pos, end - pos));
    pos = end + 1;
    ++line_number;
    if (line.empty()) continue;
    const auto fields = split_fields(line);
    if (header.empty()) {
      for (auto f : fields) header.emplace_back(f);
      columns.resize(header.size());
      continue;
    }
    if (fields.size() != header.size()) {
      throw DataError(where(source, line_number) + "expected " +
                      std::to_string(header.size()) + " fields, found " +
                      std::to_string(fields.size()));
    }
    for (std::size_t i = 0; i < fields.size(); ++i) {
      const std::string_view f = fields[i];
      double value = 0.0;
      const auto [ptr, ec] = std::from_chars(f.data(), f.data() + f.size(), value);
      if (f.empty() || ec != std::errc{} || ptr != f.data() + f.size()) {
        throw DataError(where(source, line_number) + "column '" + header[i] +
                        "' is not a number: '" + std::string(f) + "'");
      }
      if (!std::isfinite(value)) {
        throw DataError(where(source, line_number) + "column '" + header[i] +
                        "' is not finite");
      }
      columns[i].push_back(value);
    }
  }
  if (header.empty()) throw DataError(std::string(source) + ": empty CSV");
  if (columns.front().size() < 2) {
    throw DataError(std::string(source) + ": need at least 2 observations, found " +
                    std::to_string(columns.front().size()));
  }
  return {std::move(header), Panel::from_columns(columns, std::string(source))};
}

CsvPanel read_panel_csv(const std::filesystem::path& path) {
  return parse_panel_csv(read_text_file(path), path.string());
}

std::string format_double(double value) {
  char buffer[32];
  const auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof buffer, value);
  return {buffer, ptr};
}

void write_matrix_csv(std::ostream& out, const std::vector<std::string>& header,
                      std::size_t length, std::size_t dimension,
                      std::span<const double> column_major) {
  if (header.size() != dimension) {
    throw InvalidArgument("header has " + std::to_string(header.size()) +
                          " names for " + std::to_string(dimension) + " columns");
  }
  for (std::size_t i = 0; i < dimension; ++i) out << (i ? "," : "") << header[i];
  out << '\n';
  for (std::size_t t = 0; t < length; ++t) {
    for (std::size_t i = 0; i < dimension; ++i) {
      out << (i ? "," : "") << format_double(column_major[i * length + t]);
    }
    out << '\n';
  }
}

void write_panel_csv(std::ostream& out, const std::vector<std::string>& header,
                     const Panel& panel) {
  write_matrix_csv(out, header, panel.length(), panel.dimension(), panel.values());
}

void write_copula_csv(std::ostream& out, const std::vector<std::string>& header,
                      const CopulaSample& sample) {
  write_matrix_csv(out, header, sample.length(), sample.dimension(), sample.values());
}

std::vector<std::string> default_header(std::size_t dimension) {
  std::vector<std::string> header;
  for (std::size_t i = 1; i <= dimension; ++i) header.push_back("x" + std::to_string(i));
  return header;
}

Json signature_to_json(const Signature& signature) {
  Json atoms = Json::array();
  for (std::size_t a = 0; a < signature.size(); ++a) {
    atoms.push_back(Json::array({signature.position(a), signature.weight(a)}));
  }
  return {{"dimension", signature.dimension()},
          {"resolution", signature.resolution()},
          {"atoms", std::move(atoms)}};
}

Signature signature_from_json(const Json& json) {
  try {
    const auto dimension = json.at("dimension").get<std::size_t>();
    const auto resolution = json.at("resolution").get<std::size_t>();
    std::vector<double> positions;
    std::vector<double> weights;
    for (const auto& atom : json.at("atoms")) {
      const auto& coords = atom.at(0);
      if (coords.size() != dimension) {
        throw DataError("signature atom has " + std::to_string(coords.size()) +
                        " coordinates, expected " + std::to_string(dimension));
      }
      for (const auto& c : coords) positions.push_back(c.get<double>());
      weights.push_back(atom.at(1).get<double>());
    }
    return Signature::from_positions(dimension, resolution, positions, std::move(weights));
  } catch (const nlohmann::json::exception& e) {
    throw DataError(std::string("malformed signature JSON: ") + e.what());
  } catch (const InvalidArgument& e) {
    throw DataError(std::string("invalid signature: ") + e.what());
  }
}

std::vector<TargetSpec> target_specs_from_json(const Json& json) {
  if (!json.is_object()) throw DataError("target set JSON must be an object");
  std::vector<TargetSpec> specs;
  try {
    for (const auto& [name, body] : json.items()) {
      const auto kind = body.at("kind").get<std::string>();
      if (kind == "monotone") {
        specs.push_back({name, MonotoneTarget{body.at("orientation").get<std::vector<int>>()}});
      } else if (kind == "pattern") {
        PatternTarget target;
        target.pattern = parse_pattern(body.at("pattern").get<std::string>());
        if (body.contains("sample_size")) {
          target.sample_size = body.at("sample_size").get<std::size_t>();
        }
        if (body.contains("seed")) target.seed = body.at("seed").get<std::uint64_t>();
        specs.push_back({name, target});
      } else if (kind == "explicit") {
        specs.push_back({name, ExplicitTarget{signature_from_json(body.at("signature"))}});
      } else {
        throw DataError("target '" + name + "' has unknown kind '" + kind + "'");
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw DataError(std::string("malformed target set JSON: ") + e.what());
  } catch (const InvalidArgument& e) {
    throw DataError(std::string("invalid target set: ") + e.what());
  }
  return specs;
}

Json target_specs_to_json(const std::vector<TargetSpec>& specs) {
  Json json = Json::object();
  for (const auto& spec : specs) {
    Json body;
    if (const auto* m = std::get_if<MonotoneTarget>(&spec.source)) {
      body = {{"kind", "monotone"}, {"orientation", m->orientation}};
    } else if (const auto* p = std::get_if<PatternTarget>(&spec.source)) {
      body = {{"kind", "pattern"}, {"pattern", std::string(to_string(p->pattern))}};
      if (p->sample_size) body["sample_size"] = *p->sample_size;
      if (p->seed) body["seed"] = *p->seed;
    } else {
      body = {{"kind", "explicit"},
              {"signature", signature_to_json(std::get<ExplicitTarget>(spec.source).signature)}};
    }
    json[spec.name] = std::move(body);
  }
  return json;
}

Json distance_matrix_to_json(const DistanceMatrix& dm) {
  Json entries = Json::array();
  for (std::size_t i = 0; i < dm.size(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < dm.size(); ++j) row.push_back(dm(i, j));
    entries.push_back(std::move(row));
  }
  Json labels = Json::array();
  for (const auto& l : dm.labels()) labels.push_back(l);
  return {{"labels", std::move(labels)}, {"entries", std::move(entries)}};
}

DistanceMatrix distance_matrix_from_json(const Json& json) {
  try {
    const auto& rows = json.at("entries");
    const std::size_t n = rows.size();
    std::vector<double> entries;
    entries.reserve(n * n);
    for (const auto& row : rows) {
      if (row.size() != n) throw DataError("distance matrix is not square");
      for (const auto& v : row) entries.push_back(v.get<double>());
    }
    std::vector<std::string> labels;
    if (json.contains("labels")) labels = json.at("labels").get<std::vector<std::string>>();
    return DistanceMatrix(n, std::move(entries), std::move(labels));
  } catch (const nlohmann::json::exception& e) {
    throw DataError(std::string("malformed distance matrix JSON: ") + e.what());
  } catch (const InvalidArgument& e) {
    throw DataError(std::string("invalid distance matrix: ") + e.what());
  }
}

Json dendrogram_to_json(const Dendrogram& dendrogram) {
  Json merges = Json::array();
  for (const auto& m : dendrogram.merges) {
    merges.push_back({{"left", m.left}, {"right", m.right}, {"height", m.height},
                      {"size", m.size}});
  }
  return {{"leaves", dendrogram.leaves}, {"merges", std::move(merges)}};
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

Json read_json_file(const std::filesystem::path& path) {
  const std::string text = read_text_file(path);
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw DataError(path.string() + ": " + e.what());
  }
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot write '" + path.string() + "'");
  out << text;
  if (!out) throw DataError("write to '" + path.string() + "' failed");
}

}  // namespace copula_transport
