#include "wsm/ingest.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <numeric>
#include <optional>
#include <unordered_map>

#include "wsm/error.hpp"
#include "wsm/utf8.hpp"

namespace wsm::ingest {

namespace {

constexpr std::string_view kBom = "\xEF\xBB\xBF";

bool is_blank(std::string_view s) {
  std::size_t pos = 0;
  while (pos < s.size()) {
    if (!utf8::is_space(utf8::decode(s, pos))) return false;
  }
  return true;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r' ||
                        s.front() == '\n')) {
    s.remove_prefix(1);
  }
  while (!s.empty() &&
         (s.back() == ' ' || s.back() == '\t' || s.back() == '\r' || s.back() == '\n')) {
    s.remove_suffix(1);
  }
  return s;
}

// Splits the whole input into records of raw cells.
std::vector<std::vector<std::string>> split_csv(std::string_view s, ParseReport& report) {
  std::vector<std::vector<std::string>> records;
  std::vector<std::string> row;
  std::string cell;
  bool in_quotes = false;
  bool row_has_content = false;  // distinguishes a blank line from `""`

  auto end_cell = [&] {
    row.push_back(std::move(cell));
    cell.clear();
  };
  auto end_row = [&] {
    end_cell();
    if (row_has_content || row.size() > 1) records.push_back(std::move(row));
    row.clear();
    row_has_content = false;
  };

  for (std::size_t i = 0; i < s.size(); ++i) {
    const char c = s[i];
    if (in_quotes) {
      if (c == '"') {
        if (i + 1 < s.size() && s[i + 1] == '"') {
          cell.push_back('"');
          ++i;
        } else {
          in_quotes = false;
        }
      } else {
        cell.push_back(c);
      }
      continue;
    }
    switch (c) {
      case '"':
        in_quotes = true;
        row_has_content = true;
        break;
      case ',':
        end_cell();
        row_has_content = true;
        break;
      case '\r':
        if (i + 1 < s.size() && s[i + 1] == '\n') ++i;
        end_row();
        break;
      case '\n':
        end_row();
        break;
      default:
        cell.push_back(c);
        row_has_content = true;
    }
  }
  if (in_quotes) ++report.unterminated_quotes;
  if (row_has_content || !cell.empty() || !row.empty()) end_row();
  return records;
}

std::vector<std::vector<std::string>> split_tsv(std::string_view s) {
  std::vector<std::vector<std::string>> records;
  std::size_t start = 0;
  while (start <= s.size()) {
    std::size_t end = s.find('\n', start);
    if (end == std::string_view::npos) end = s.size();
    std::string_view line = s.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (!line.empty()) {
      std::vector<std::string> row;
      std::size_t cell_start = 0;
      while (true) {
        const std::size_t tab = line.find('\t', cell_start);
        if (tab == std::string_view::npos) {
          row.emplace_back(line.substr(cell_start));
          break;
        }
        row.emplace_back(line.substr(cell_start, tab - cell_start));
        cell_start = tab + 1;
      }
      records.push_back(std::move(row));
    }
    if (end == s.size()) break;
    start = end + 1;
  }
  return records;
}

std::string quote_csv(std::string_view cell, bool force) {
  const bool needs = force || cell.find_first_of(",\"\r\n") != std::string_view::npos;
  if (!needs) return std::string(cell);
  std::string out = "\"";
  for (char c : cell) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

std::optional<double> parse_number(std::string_view s) {
  s = trim(s);
  if (s.empty()) return std::nullopt;
  if (s.front() == '+') s.remove_prefix(1);
  double value = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size() || !std::isfinite(value)) {
    return std::nullopt;
  }
  return value;
}

bool read_digits(std::string_view s, std::size_t& pos, std::size_t count, int& out) {
  if (pos + count > s.size()) return false;
  out = 0;
  for (std::size_t i = 0; i < count; ++i) {
    const char c = s[pos + i];
    if (c < '0' || c > '9') return false;
    out = out * 10 + (c - '0');
  }
  pos += count;
  return true;
}

// Seconds since the epoch for YYYY-MM[-DD][(T| )hh:mm[:ss[.fff]]][Z|±hh:mm].
std::optional<double> parse_iso8601(std::string_view s) {
  s = trim(s);
  std::size_t pos = 0;
  int year = 0, month = 0, day = 1;
  if (!read_digits(s, pos, 4, year) || pos >= s.size() || s[pos] != '-') return std::nullopt;
  ++pos;
  if (!read_digits(s, pos, 2, month)) return std::nullopt;
  if (pos < s.size() && s[pos] == '-') {
    ++pos;
    if (!read_digits(s, pos, 2, day)) return std::nullopt;
  }
  const std::chrono::year_month_day ymd{std::chrono::year{year},
                                        std::chrono::month{static_cast<unsigned>(month)},
                                        std::chrono::day{static_cast<unsigned>(day)}};
  if (!ymd.ok()) return std::nullopt;
  double seconds =
      static_cast<double>(std::chrono::sys_days{ymd}.time_since_epoch().count()) * 86400.0;
  if (pos == s.size()) return seconds;

  if (s[pos] != 'T' && s[pos] != ' ') return std::nullopt;
  ++pos;
  int hh = 0, mm = 0, ss = 0;
  if (!read_digits(s, pos, 2, hh) || pos >= s.size() || s[pos] != ':') return std::nullopt;
  ++pos;
  if (!read_digits(s, pos, 2, mm)) return std::nullopt;
  double frac = 0;
  if (pos < s.size() && s[pos] == ':') {
    ++pos;
    if (!read_digits(s, pos, 2, ss)) return std::nullopt;
    if (pos < s.size() && s[pos] == '.') {
      ++pos;
      double scale = 0.1;
      const std::size_t start = pos;
      while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') {
        frac += (s[pos] - '0') * scale;
        scale /= 10;
        ++pos;
      }
      if (pos == start) return std::nullopt;
    }
  }
  if (hh > 23 || mm > 59 || ss > 60) return std::nullopt;
  seconds += hh * 3600.0 + mm * 60.0 + ss + frac;
  if (pos == s.size()) return seconds;
  if (s[pos] == 'Z' && pos + 1 == s.size()) return seconds;
  if (s[pos] == '+' || s[pos] == '-') {
    const double sign = s[pos] == '+' ? 1.0 : -1.0;
    ++pos;
    int oh = 0, om = 0;
    if (!read_digits(s, pos, 2, oh)) return std::nullopt;
    if (pos < s.size() && s[pos] == ':') ++pos;
    if (!read_digits(s, pos, 2, om) || pos != s.size()) return std::nullopt;
    return seconds - sign * (oh * 3600.0 + om * 60.0);
  }
  return std::nullopt;
}

}  // namespace

TableFormat format_from_path(std::string_view path) {
  auto dot = path.rfind('.');
  if (dot == std::string_view::npos) return TableFormat::Csv;
  const std::string ext = utf8::to_lower(path.substr(dot + 1));
  return ext == "tsv" || ext == "tab" ? TableFormat::Tsv : TableFormat::Csv;
}

ParsedTable parse_table(std::string_view data, TableFormat format) {
  ParsedTable parsed;
  std::string text = utf8::sanitize(data, parsed.report.invalid_utf8);
  std::string_view view = text;
  if (view.starts_with(kBom)) view.remove_prefix(kBom.size());

  auto records = format == TableFormat::Csv ? split_csv(view, parsed.report) : split_tsv(view);
  if (records.empty()) throw Error(Stage::Ingest, ErrorCode::EmptyInput, "input has no header row");

  for (auto& h : records.front()) parsed.table.headers.emplace_back(trim(h));
  if (records.size() < 2) throw Error(Stage::Ingest, ErrorCode::EmptyInput, "input has no data rows");

  const std::size_t width = parsed.table.headers.size();
  parsed.table.rows.reserve(records.size() - 1);
  for (std::size_t i = 1; i < records.size(); ++i) {
    if (records[i].size() != width) {
      ++parsed.report.ragged_rows;
      continue;
    }
    parsed.table.rows.push_back(std::move(records[i]));
  }
  return parsed;
}

std::string serialize_table(const RawTable& table, TableFormat format) {
  std::string out;
  auto emit_row = [&](const std::vector<std::string>& row) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i > 0) out.push_back(format == TableFormat::Csv ? ',' : '\t');
      if (format == TableFormat::Csv) {
        out += quote_csv(row[i], row.size() == 1 && row[i].empty());
      } else {
        std::string cell = row[i];
        std::replace_if(cell.begin(), cell.end(),
                        [](char c) { return c == '\t' || c == '\n' || c == '\r'; }, ' ');
        out += cell;
      }
    }
    out.push_back('\n');
  };
  emit_row(table.headers);
  for (const auto& row : table.rows) emit_row(row);
  return out;
}

std::string clean_text(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  std::size_t pos = 0;
  while (pos < text.size()) {
    const std::size_t start = pos;
    const char32_t cp = utf8::decode(text, pos);
    if (cp == '\t' || cp == '\n' || cp == '\r' || cp == '\v' || cp == '\f') {
      out.push_back(' ');
    } else if (cp < 0x20 || cp == 0x7F || (cp >= 0x80 && cp <= 0x9F)) {
      continue;
    } else {
      out.append(text.substr(start, pos - start));
    }
  }
  return std::string(trim(out));
}

Extraction extract_records(const RawTable& table, std::string_view time_column,
                           std::string_view text_column) {
  if (time_column == text_column) {
    throw Error(Stage::Ingest, ErrorCode::UnknownColumn,
                "time and text columns must differ (both are '" + std::string(time_column) + "')");
  }
  auto find = [&](std::string_view name) {
    auto it = std::find(table.headers.begin(), table.headers.end(), name);
    if (it == table.headers.end()) {
      throw Error(Stage::Ingest, ErrorCode::UnknownColumn, "no column named '" + std::string(name) + "'");
    }
    return static_cast<std::size_t>(it - table.headers.begin());
  };
  const std::size_t time_index = find(time_column);
  const std::size_t text_index = find(text_column);

  Extraction out;
  out.records.reserve(table.rows.size());
  for (const auto& row : table.rows) {
    std::string_view key = trim(row[time_index]);
    if (key.empty() || is_blank(key)) {
      ++out.dropped_blank_time;
      continue;
    }
    std::string text = clean_text(row[text_index]);
    if (text.empty() || is_blank(text)) {
      ++out.dropped_blank_text;
      continue;
    }
    out.records.push_back(Record{std::string(key), std::move(text)});
  }
  if (out.records.empty()) {
    throw Error(Stage::Ingest, ErrorCode::AllRowsDropped,
                std::to_string(table.rows.size()) + " rows, none with both a time and a text value");
  }
  return out;
}

BoxOrder detect_order(std::span<const std::string> keys) {
  if (keys.empty()) return BoxOrder::FirstAppearance;
  if (std::all_of(keys.begin(), keys.end(), [](const auto& k) { return parse_number(k).has_value(); })) {
    return BoxOrder::Numeric;
  }
  if (std::all_of(keys.begin(), keys.end(), [](const auto& k) { return parse_iso8601(k).has_value(); })) {
    return BoxOrder::Chronological;
  }
  return BoxOrder::FirstAppearance;
}

std::vector<TimeBox> merge_records(std::span<const Record> records) {
  std::vector<TimeBox> boxes;
  std::unordered_map<std::string_view, std::size_t> slot;
  for (const auto& record : records) {
    auto [it, inserted] = slot.try_emplace(record.time_key, boxes.size());
    if (inserted) {
      boxes.push_back(TimeBox{0, record.time_key, record.text});
    } else {
      auto& box = boxes[it->second];
      box.text.push_back(' ');
      box.text += record.text;
    }
  }

  std::vector<std::string> keys;
  keys.reserve(boxes.size());
  for (const auto& b : boxes) keys.push_back(b.label);
  const BoxOrder order = detect_order(keys);
  if (order != BoxOrder::FirstAppearance) {
    std::vector<double> sort_key(boxes.size());
    for (std::size_t i = 0; i < boxes.size(); ++i) {
      sort_key[i] = order == BoxOrder::Numeric ? *parse_number(keys[i]) : *parse_iso8601(keys[i]);
    }
    std::vector<std::size_t> perm(boxes.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::stable_sort(perm.begin(), perm.end(),
                     [&](std::size_t a, std::size_t b) { return sort_key[a] < sort_key[b]; });
    std::vector<TimeBox> sorted;
    sorted.reserve(boxes.size());
    for (std::size_t i : perm) sorted.push_back(std::move(boxes[i]));
    boxes = std::move(sorted);
  }
  for (std::size_t i = 0; i < boxes.size(); ++i) boxes[i].index = i;
  return boxes;
}

}  // namespace wsm::ingest
