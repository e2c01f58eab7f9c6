#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wsm/ingest.hpp"
#include "wsm/layout.hpp"
#include "wsm/nlp.hpp"

namespace wsm {

struct PipelineOptions {
  layout::LayoutConfig layout;
  ingest::TableFormat format = ingest::TableFormat::Csv;
  // Empty picks a default: time = first header, text = the other header with
  // the longest average cell.
  std::string time_column;
  std::string text_column;
};

struct PipelineStats {
  std::size_t rows = 0;
  std::size_t ragged_rows = 0;
  std::size_t invalid_utf8 = 0;
  std::size_t dropped_rows = 0;  // blank time or text
  std::size_t boxes = 0;
  std::size_t tokens = 0;          // after stop-word filtering
  std::size_t distinct_terms = 0;  // (lemma, category) pairs counted
  std::size_t placed = 0;
  std::size_t dropped_words = 0;
  std::string time_column;
  std::string text_column;
  double ingest_ms = 0;   // parse + clean + merge
  double nlp_ms = 0;
  double metrics_ms = 0;
  double layout_ms = 0;
};

struct PipelineResult {
  layout::LayoutResult layout;
  PipelineStats stats;
};

// Runs ingest → nlp → metrics → layout. Throws wsm::Error.
PipelineResult run_pipeline(std::string_view file_bytes, const PipelineOptions& options,
                            const nlp::Lexicon& lexicon);

// Ingest and NLP only; returns the token lists per box.
struct Extracted {
  std::vector<ingest::TimeBox> boxes;
  std::vector<std::vector<nlp::Token>> tokens;
  PipelineStats stats;
};
Extracted extract(std::string_view file_bytes, const PipelineOptions& options, const nlp::Lexicon& lexicon);

// Config document: a JSON object with any of minFont, maxFont, topK, width,
// height, mode, metric, tokenization, format, timeColumn, textColumn.
// Missing keys keep their defaults. Throws InvalidConfig.
PipelineOptions parse_config_document(std::string_view json);

// The UI boundary: config document + file bytes → layout document.
std::string run_document(std::string_view config_json, std::string_view file_bytes, const nlp::Lexicon& lexicon);

}  // namespace wsm
