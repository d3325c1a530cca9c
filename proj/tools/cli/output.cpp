#include "output.hpp"

#include <unistd.h>

#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <system_error>

#include "json.hpp"

namespace pathsum::cli {
namespace {

int significant_digits(std::string_view s) {
  int count = 0;
  bool leading = true;
  for (const char c : s) {
    if (c == 'e' || c == 'E') {
      break;
    }
    if (c < '0' || c > '9') {
      continue;
    }
    if (leading && c == '0') {
      continue;
    }
    leading = false;
    ++count;
  }
  return count;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) {
    return s;
  }
  std::string quoted = "\"";
  for (const char c : s) {
    quoted += c;
    if (c == '"') {
      quoted += '"';
    }
  }
  return quoted + '"';
}

nlohmann::ordered_json to_json(const Cell& cell, int digits) {
  return std::visit(
      [digits](const auto& v) -> nlohmann::ordered_json {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, double>) {
          if (!std::isfinite(v)) {
            return format_number(v, digits);
          }
          return canonical(v, digits);
        } else {
          return v;
        }
      },
      cell);
}

}  // namespace

std::string format_number(double value, int digits) {
  if (std::isnan(value)) {
    return "nan";
  }
  if (std::isinf(value)) {
    return value > 0 ? "inf" : "-inf";
  }
  std::array<char, 64> buf{};
  auto res = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  std::string_view shortest(buf.data(), static_cast<std::size_t>(res.ptr - buf.data()));
  if (significant_digits(shortest) <= digits) {
    return std::string(shortest);
  }
  res = std::to_chars(buf.data(), buf.data() + buf.size(), value,
                      std::chars_format::general, digits);
  return {buf.data(), static_cast<std::size_t>(res.ptr - buf.data())};
}

double canonical(double value, int digits) {
  if (!std::isfinite(value)) {
    return value;
  }
  const std::string text = format_number(value, digits);
  double parsed = 0.0;
  std::from_chars(text.data(), text.data() + text.size(), parsed);
  return parsed;
}

std::string format_cell(const Cell& cell, int digits) {
  return std::visit(
      [digits](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, double>) {
          return format_number(v, digits);
        } else if constexpr (std::is_same_v<T, bool>) {
          return v ? "true" : "false";
        } else if constexpr (std::is_same_v<T, std::string>) {
          return v;
        } else {
          return std::to_string(v);
        }
      },
      cell);
}

std::string render(const Table& table, Format format, int digits) {
  if (format == Format::json) {
    nlohmann::ordered_json doc;
    doc["meta"] = nlohmann::ordered_json::object();
    for (const auto& [k, v] : table.meta) {
      doc["meta"][k] = v;
    }
    doc["columns"] = table.columns;
    doc["rows"] = nlohmann::ordered_json::array();
    for (const auto& row : table.rows) {
      nlohmann::ordered_json obj = nlohmann::ordered_json::object();
      for (std::size_t c = 0; c < table.columns.size(); ++c) {
        obj[table.columns[c]] = to_json(row[c], digits);
      }
      doc["rows"].push_back(std::move(obj));
    }
    return doc.dump(2) + "\n";
  }
  std::ostringstream os;
  for (const auto& [k, v] : table.meta) {
    os << "# " << k << '=' << v << '\n';
  }
  for (std::size_t c = 0; c < table.columns.size(); ++c) {
    os << (c ? "," : "") << csv_field(table.columns[c]);
  }
  os << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      os << (c ? "," : "") << csv_field(format_cell(row[c], digits));
    }
    os << '\n';
  }
  return os.str();
}

std::string render(const Report& report, Format format, int digits) {
  if (format == Format::json) {
    nlohmann::ordered_json doc = nlohmann::ordered_json::object();
    doc["command"] = report.command;
    for (const auto& [k, v] : report.fields) {
      doc[k] = to_json(v, digits);
    }
    return doc.dump(2) + "\n";
  }
  std::ostringstream os;
  if (format == Format::csv) {
    os << "key,value\n";
    for (const auto& [k, v] : report.fields) {
      os << csv_field(k) << ',' << csv_field(format_cell(v, digits)) << '\n';
    }
    return os.str();
  }
  for (const auto& [k, v] : report.fields) {
    os << k << '=' << format_cell(v, digits) << '\n';
  }
  for (const auto& line : report.lines) {
    os << line << '\n';
  }
  return os.str();
}

void emit(const std::string& content,
          const std::optional<std::filesystem::path>& out,
          std::ostream& fallback) {
  if (!out) {
    fallback << content;
    fallback.flush();
    return;
  }
  auto tmp = *out;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream file(tmp, std::ios::binary | std::ios::trunc);
    file << content;
    file.close();
    if (!file) {
      std::error_code ignored;
      std::filesystem::remove(tmp, ignored);
      throw std::runtime_error("cannot write " + out->string());
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, *out, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw std::runtime_error("cannot write " + out->string());
  }
}

}  // namespace pathsum::cli
