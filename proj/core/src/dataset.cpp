#include "becscat/dataset.hpp"

#include <nlohmann/json.hpp>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

#include "becscat/error.hpp"
#include "becscat/format.hpp"

namespace becscat {

std::string format_number(double value) {
  char buffer[32];
  const int len = std::snprintf(buffer, sizeof buffer, "%.17g", value);
  return std::string(buffer, static_cast<std::size_t>(len));
}

Column& Dataset::add_column(std::string column_name, std::string unit, std::vector<double> values) {
  columns.push_back(Column{std::move(column_name), std::move(unit), std::move(values)});
  return columns.back();
}

void Dataset::add_provenance(std::string key, std::string value) {
  provenance.emplace_back(std::move(key), std::move(value));
}

const Column* Dataset::column(std::string_view column_name) const noexcept {
  for (const Column& c : columns) {
    if (c.name == column_name) return &c;
  }
  return nullptr;
}

const std::string* Dataset::provenance_value(std::string_view key) const noexcept {
  for (const auto& [k, v] : provenance) {
    if (k == key) return &v;
  }
  return nullptr;
}

std::size_t Dataset::row_count() const noexcept {
  return columns.empty() ? 0 : columns.front().values.size();
}

void Dataset::validate() const {
  auto fail = [](const std::string& what) { throw Error(ErrorKind::invalid_input, what); };
  auto plain = [](std::string_view s) {
    return s.find_first_of(",\n\r") == std::string_view::npos;
  };
  if (name.empty() || !plain(name)) fail("dataset needs a plain, non-empty name");
  std::set<std::string> seen;
  for (const Column& c : columns) {
    if (c.name.empty() || !plain(c.name) || c.name.find('=') != std::string::npos) {
      fail("invalid column name '" + c.name + "'");
    }
    if (!seen.insert(c.name).second) fail("duplicate column '" + c.name + "'");
    if (c.unit.empty() || !plain(c.unit)) fail("column '" + c.name + "' needs a unit");
    if (c.values.size() != row_count()) fail("column '" + c.name + "' has a different length");
    for (double v : c.values) {
      if (!std::isfinite(v)) fail("column '" + c.name + "' holds a non-finite value");
    }
  }
  for (const auto& [k, v] : provenance) {
    if (k.empty() || !plain(k) || k.find('=') != std::string::npos || !plain(v)) {
      fail("invalid provenance entry '" + k + "'");
    }
  }
}

std::string_view to_string(Format format) noexcept {
  return format == Format::csv ? "csv" : "json";
}

Format parse_format(std::string_view text) {
  if (text == "csv") return Format::csv;
  if (text == "json") return Format::json;
  throw Error(ErrorKind::invalid_config, "unknown format '" + std::string(text) + "'");
}

std::string_view file_extension(Format format) noexcept {
  return format == Format::csv ? ".csv" : ".json";
}

namespace {

std::string render_csv(const Dataset& d) {
  std::string out;
  out += "# dataset=" + d.name + "\n";
  for (const auto& [k, v] : d.provenance) out += "# " + k + "=" + v + "\n";
  for (const Column& c : d.columns) out += "# unit." + c.name + "=" + c.unit + "\n";
  for (std::size_t i = 0; i < d.columns.size(); ++i) {
    if (i > 0) out += ',';
    out += d.columns[i].name;
  }
  out += '\n';
  for (std::size_t row = 0; row < d.row_count(); ++row) {
    for (std::size_t i = 0; i < d.columns.size(); ++i) {
      if (i > 0) out += ',';
      out += format_number(d.columns[i].values[row]);
    }
    out += '\n';
  }
  return out;
}

double parse_number(const std::string& token) {
  char* end = nullptr;
  const double v = std::strtod(token.c_str(), &end);
  if (token.empty() || end == token.c_str() || *end != '\0' || !std::isfinite(v)) {
    throw Error(ErrorKind::invalid_input, "malformed number '" + token + "'");
  }
  return v;
}

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, sep)) out.push_back(field);
  if (!line.empty() && line.back() == sep) out.emplace_back();
  return out;
}

Dataset parse_csv(std::string_view text) {
  Dataset d;
  std::istringstream in{std::string(text)};
  std::string line;
  std::vector<std::pair<std::string, std::string>> units;
  bool header_seen = false;
  while (std::getline(in, line)) {
    if (line.rfind("# ", 0) == 0) {
      if (header_seen) throw Error(ErrorKind::invalid_input, "comment after the column header");
      const std::string body = line.substr(2);
      const auto eq = body.find('=');
      if (eq == std::string::npos) throw Error(ErrorKind::invalid_input, "malformed header line");
      std::string key = body.substr(0, eq);
      std::string value = body.substr(eq + 1);
      if (key == "dataset") {
        d.name = std::move(value);
      } else if (key.rfind("unit.", 0) == 0) {
        units.emplace_back(key.substr(5), std::move(value));
      } else {
        d.add_provenance(std::move(key), std::move(value));
      }
      continue;
    }
    if (!header_seen) {
      header_seen = true;
      if (line.empty()) continue;
      for (std::string& name : split(line, ',')) d.add_column(std::move(name), "");
      continue;
    }
    const auto fields = split(line, ',');
    if (fields.size() != d.columns.size()) {
      throw Error(ErrorKind::invalid_input, "row has " + std::to_string(fields.size()) +
                                                " fields, expected " +
                                                std::to_string(d.columns.size()));
    }
    for (std::size_t i = 0; i < fields.size(); ++i) {
      d.columns[i].values.push_back(parse_number(fields[i]));
    }
  }
  for (auto& [name, unit] : units) {
    bool matched = false;
    for (Column& c : d.columns) {
      if (c.name == name) {
        c.unit = unit;
        matched = true;
      }
    }
    if (!matched) throw Error(ErrorKind::invalid_input, "unit for unknown column '" + name + "'");
  }
  d.validate();
  return d;
}

std::string render_json(const Dataset& d) {
  nlohmann::ordered_json j;
  j["name"] = d.name;
  j["provenance"] = nlohmann::ordered_json::object();
  for (const auto& [k, v] : d.provenance) j["provenance"][k] = v;
  j["units"] = nlohmann::ordered_json::object();
  j["column_order"] = nlohmann::ordered_json::array();
  j["columns"] = nlohmann::ordered_json::object();
  for (const Column& c : d.columns) {
    j["units"][c.name] = c.unit;
    j["column_order"].push_back(c.name);
    j["columns"][c.name] = c.values;
  }
  return j.dump(1) + "\n";
}

Dataset parse_json(std::string_view text) {
  nlohmann::ordered_json j;
  try {
    j = nlohmann::ordered_json::parse(text);
    Dataset d;
    d.name = j.at("name").get<std::string>();
    for (const auto& [k, v] : j.at("provenance").items()) d.add_provenance(k, v.get<std::string>());
    for (const auto& name : j.at("column_order")) {
      const auto key = name.get<std::string>();
      d.add_column(key, j.at("units").at(key).get<std::string>(),
                   j.at("columns").at(key).get<std::vector<double>>());
    }
    d.validate();
    return d;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::invalid_input, std::string("malformed dataset JSON: ") + e.what());
  }
}

}  // namespace

std::string render_dataset(const Dataset& dataset, Format format) {
  dataset.validate();
  return format == Format::csv ? render_csv(dataset) : render_json(dataset);
}

Dataset parse_dataset(std::string_view text, Format format) {
  return format == Format::csv ? parse_csv(text) : parse_json(text);
}

void emit_dataset(const Dataset& dataset, Format format, const std::filesystem::path& path) {
  const std::string bytes = render_dataset(dataset, format);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorKind::file_error, "cannot open " + path.string() + " for writing");
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  out.close();
  if (!out) throw Error(ErrorKind::file_error, "failed writing " + path.string());
}

Dataset read_dataset(const std::filesystem::path& path, Format format) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::file_error, "cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_dataset(buffer.str(), format);
}

}  // namespace becscat
