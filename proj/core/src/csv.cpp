#include "bohrlab/csv.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <stdexcept>

namespace bohrlab {

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

namespace {

bool needs_quotes(std::string_view s) {
  return s.find_first_of(",\"\n\r") != std::string_view::npos;
}

void put_field(std::string& out, std::string_view s) {
  if (!needs_quotes(s)) {
    out += s;
    return;
  }
  out += '"';
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
}

void put_row(std::string& out, const std::vector<std::string>& row) {
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (i) out += ',';
    put_field(out, row[i]);
  }
  out += '\n';
}

// one logical record; pos is advanced past the newline
std::vector<std::string> read_record(std::string_view text, std::size_t& pos) {
  std::vector<std::string> fields;
  std::string cur;
  bool quoted = false;
  while (pos < text.size()) {
    const char c = text[pos++];
    if (quoted) {
      if (c == '"') {
        if (pos < text.size() && text[pos] == '"') {
          cur += '"';
          ++pos;
        } else {
          quoted = false;
        }
      } else {
        cur += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.push_back(std::move(cur));
      cur.clear();
    } else if (c == '\n') {
      break;
    } else if (c != '\r') {
      cur += c;
    }
  }
  if (quoted) throw std::invalid_argument("csv: unterminated quoted field");
  fields.push_back(std::move(cur));
  return fields;
}

}  // namespace

CsvTable::CsvTable(std::string kind, std::vector<std::string> columns)
    : kind_(std::move(kind)), columns_(std::move(columns)) {
  if (kind_.empty() || columns_.empty()) throw std::invalid_argument("csv table needs a kind and columns");
}

void CsvTable::add_row(std::vector<std::string> row) {
  if (row.size() != columns_.size()) {
    throw std::invalid_argument("csv row has " + std::to_string(row.size()) + " fields, header has " +
                                std::to_string(columns_.size()));
  }
  rows_.push_back(std::move(row));
}

void CsvTable::append(const CsvTable& other) {
  if (other.kind_ != kind_ || other.columns_ != columns_) throw std::invalid_argument("csv append: schema mismatch");
  rows_.insert(rows_.end(), other.rows_.begin(), other.rows_.end());
}

std::string CsvTable::schema_line() const {
  return "# schema=bohrlab/" + kind_ + "/" + std::to_string(kVersion);
}

std::string CsvTable::str() const {
  std::string out = schema_line();
  out += '\n';
  put_row(out, columns_);
  for (const auto& r : rows_) put_row(out, r);
  return out;
}

void CsvTable::write(const std::string& path) const {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw std::runtime_error("cannot open '" + path + "' for writing");
  const auto s = str();
  f.write(s.data(), static_cast<std::streamsize>(s.size()));
  if (!f) throw std::runtime_error("write failed for '" + path + "'");
}

CsvTable CsvTable::parse(std::string_view text) {
  static constexpr std::string_view prefix = "# schema=bohrlab/";
  if (text.substr(0, prefix.size()) != prefix) throw std::invalid_argument("csv: missing bohrlab schema line");
  const auto eol = text.find('\n');
  if (eol == std::string_view::npos) throw std::invalid_argument("csv: no header");
  std::string_view tag = text.substr(prefix.size(), eol - prefix.size());
  if (!tag.empty() && tag.back() == '\r') tag.remove_suffix(1);
  const auto slash = tag.rfind('/');
  if (slash == std::string_view::npos || slash == 0) throw std::invalid_argument("csv: malformed schema tag");
  if (tag.substr(slash + 1) != std::to_string(kVersion)) throw std::invalid_argument("csv: unsupported schema version");
  std::size_t pos = eol + 1;
  CsvTable t(std::string(tag.substr(0, slash)), read_record(text, pos));
  while (pos < text.size()) {
    auto row = read_record(text, pos);
    if (row.size() == 1 && row[0].empty()) continue;
    t.add_row(std::move(row));
  }
  return t;
}

}  // namespace bohrlab
