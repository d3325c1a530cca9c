#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace pathsum::cli {

enum class Format { text, csv, json };

using Cell = std::variant<std::int64_t, double, bool, std::string>;

/// Shortest round-trip form when it fits in `digits` significant digits,
/// otherwise %.{digits}g. Always '.' as decimal separator.
std::string format_number(double value, int digits);

/// The double that format_number(value, digits) parses back to.
double canonical(double value, int digits);

std::string format_cell(const Cell& cell, int digits);

struct Table {
  std::vector<std::pair<std::string, std::string>> meta;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

struct Report {
  std::string command;
  std::vector<std::pair<std::string, Cell>> fields{};
  std::vector<std::string> lines{};  ///< trailing free-form lines (text only)

  void add(std::string key, Cell value) {
    fields.emplace_back(std::move(key), std::move(value));
  }
};

std::string render(const Table& table, Format format, int digits);
std::string render(const Report& report, Format format, int digits);

/// Writes `content` to `out` via a temporary sibling and rename, or to
/// `fallback` when no path is given.
void emit(const std::string& content,
          const std::optional<std::filesystem::path>& out,
          std::ostream& fallback);

}  // namespace pathsum::cli
