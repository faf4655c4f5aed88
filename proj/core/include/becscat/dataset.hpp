#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace becscat {

struct Column {
  std::string name;
  std::string unit;
  std::vector<double> values;

  friend bool operator==(const Column&, const Column&) = default;
};

/// A named table of equal-length numeric columns with ordered provenance.
struct Dataset {
  std::string name;
  std::vector<Column> columns;
  std::vector<std::pair<std::string, std::string>> provenance;

  Column& add_column(std::string column_name, std::string unit, std::vector<double> values = {});
  void add_provenance(std::string key, std::string value);

  /// Null when absent.
  const Column* column(std::string_view column_name) const noexcept;
  const std::string* provenance_value(std::string_view key) const noexcept;

  std::size_t row_count() const noexcept;

  /// Error(invalid_input) for ragged columns, duplicate or empty names,
  /// missing units, or characters that would break the CSV layout.
  void validate() const;

  friend bool operator==(const Dataset&, const Dataset&) = default;
};

enum class Format { csv, json };

std::string_view to_string(Format format) noexcept;
/// "csv" or "json"; Error(invalid_config) otherwise.
Format parse_format(std::string_view text);
std::string_view file_extension(Format format) noexcept;

// CSV layout:
//   # dataset=<name>
//   # <key>=<value>            one line per provenance entry, in order
//   # unit.<column>=<unit>     one line per column
//   <col1>,<col2>,...
//   rows, every value printed with 17 significant digits
//
// JSON layout: one object
//   {"name", "provenance": {...}, "units": {...}, "column_order": [...],
//    "columns": {name: [values]}}
std::string render_dataset(const Dataset& dataset, Format format);
Dataset parse_dataset(std::string_view text, Format format);

/// Writes render_dataset() bytes. Error(file_error) naming the path on failure.
void emit_dataset(const Dataset& dataset, Format format, const std::filesystem::path& path);
Dataset read_dataset(const std::filesystem::path& path, Format format);

}  // namespace becscat
