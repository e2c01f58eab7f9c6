#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace wsm::ingest {

enum class TableFormat { Csv, Tsv };

// `.tsv`/`.tab` → Tsv, anything else → Csv.
TableFormat format_from_path(std::string_view path);

struct RawTable {
  std::vector<std::string> headers;
  std::vector<std::vector<std::string>> rows;  // each row has headers.size() cells

  friend bool operator==(const RawTable&, const RawTable&) = default;
};

struct ParseReport {
  std::size_t invalid_utf8 = 0;        // sequences replaced with U+FFFD
  std::size_t ragged_rows = 0;         // rows dropped for a wrong cell count
  std::size_t unterminated_quotes = 0;
};

struct ParsedTable {
  RawTable table;
  ParseReport report;
};

// CSV follows RFC 4180 quoting (double quotes, doubled-quote escape, quoted
// line breaks). TSV splits on hard tabs with no quoting. Blank lines are
// skipped; a trailing newline is tolerated. Throws EmptyInput when the input
// holds no header or no data rows.
ParsedTable parse_table(std::string_view data, TableFormat format);

// Inverse of parse_table for CSV. TSV cannot carry tabs or line breaks
// inside cells; those are written as spaces.
std::string serialize_table(const RawTable& table, TableFormat format);

struct Record {
  std::string time_key;
  std::string text;

  friend bool operator==(const Record&, const Record&) = default;
};

struct Extraction {
  std::vector<Record> records;
  std::size_t dropped_blank_time = 0;
  std::size_t dropped_blank_text = 0;

  std::size_t dropped() const { return dropped_blank_time + dropped_blank_text; }
};

// Throws UnknownColumn for a missing or repeated column, AllRowsDropped when
// nothing survives cleansing.
Extraction extract_records(const RawTable& table, std::string_view time_column,
                           std::string_view text_column);

// Replaces tabs and line breaks with spaces, drops other control characters
// and trims the result.
std::string clean_text(std::string_view text);

struct TimeBox {
  std::size_t index = 0;
  std::string label;
  std::string text;

  friend bool operator==(const TimeBox&, const TimeBox&) = default;
};

enum class BoxOrder { Numeric, Chronological, FirstAppearance };

// Numeric when every key parses as a number, chronological when every key is
// an ISO-8601 date/time, otherwise first appearance.
BoxOrder detect_order(std::span<const std::string> keys);

// One box per distinct time key; texts joined by one space in input order.
std::vector<TimeBox> merge_records(std::span<const Record> records);

}  // namespace wsm::ingest
