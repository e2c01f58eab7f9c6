#include "wsm/pipeline.hpp"

#include <chrono>

#include <json.hpp>

#include "wsm/error.hpp"
#include "wsm/metrics.hpp"
#include "wsm/render.hpp"
#include "wsm/utf8.hpp"

namespace wsm {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

void choose_columns(const ingest::RawTable& table, std::string& time_column, std::string& text_column) {
  if (time_column.empty() && !table.headers.empty()) time_column = table.headers.front();
  if (!text_column.empty()) return;
  double best = -1;
  for (std::size_t c = 0; c < table.headers.size(); ++c) {
    if (table.headers[c] == time_column) continue;
    double total = 0;
    for (const auto& row : table.rows) total += static_cast<double>(utf8::length(row[c]));
    const double mean = table.rows.empty() ? 0 : total / static_cast<double>(table.rows.size());
    if (mean > best) {
      best = mean;
      text_column = table.headers[c];
    }
  }
}

[[noreturn]] void bad_config(const std::string& what) { throw Error(Stage::Config, ErrorCode::InvalidConfig, what); }

}  // namespace

Extracted extract(std::string_view file_bytes, const PipelineOptions& options, const nlp::Lexicon& lexicon) {
  Extracted out;
  auto& stats = out.stats;

  auto start = Clock::now();
  const auto parsed = ingest::parse_table(file_bytes, options.format);
  stats.rows = parsed.table.rows.size();
  stats.ragged_rows = parsed.report.ragged_rows;
  stats.invalid_utf8 = parsed.report.invalid_utf8;
  stats.time_column = options.time_column;
  stats.text_column = options.text_column;
  choose_columns(parsed.table, stats.time_column, stats.text_column);
  const auto extraction = ingest::extract_records(parsed.table, stats.time_column, stats.text_column);
  stats.dropped_rows = extraction.dropped();
  out.boxes = ingest::merge_records(extraction.records);
  stats.boxes = out.boxes.size();
  stats.ingest_ms = ms_since(start);

  start = Clock::now();
  out.tokens.reserve(out.boxes.size());
  for (const auto& box : out.boxes) {
    out.tokens.push_back(nlp::analyze(box.text, options.layout.tokenization, lexicon));
    stats.tokens += out.tokens.back().size();
  }
  stats.nlp_ms = ms_since(start);
  return out;
}

PipelineResult run_pipeline(std::string_view file_bytes, const PipelineOptions& options,
                            const nlp::Lexicon& lexicon) {
  options.layout.validate();
  Extracted extracted = extract(file_bytes, options, lexicon);
  PipelineResult result;
  auto& stats = result.stats;
  stats = extracted.stats;
  const auto& cfg = options.layout;

  auto start = Clock::now();
  const auto term_stats = metrics::count_frequencies(extracted.tokens, cfg.mode);
  stats.distinct_terms = term_stats.size();
  const auto weights = metrics::category_weights(term_stats, extracted.boxes.size());
  const auto selections =
      metrics::select_top_k(term_stats, cfg.mode, cfg.metric, static_cast<std::size_t>(cfg.top_k));
  stats.metrics_ms = ms_since(start);

  start = Clock::now();
  std::vector<std::string> names;
  for (auto c : metrics::categories(cfg.mode)) names.emplace_back(metrics::to_string(c));
  const auto layers = layout::compute_layers(weights, names, cfg);
  std::vector<std::string> labels;
  labels.reserve(extracted.boxes.size());
  for (const auto& box : extracted.boxes) labels.push_back(box.label);
  result.layout = layout::place_words(layers, selections, std::move(labels), cfg);
  stats.layout_ms = ms_since(start);
  stats.placed = result.layout.words.size();
  stats.dropped_words = result.layout.dropped.size();
  return result;
}

PipelineOptions parse_config_document(std::string_view json) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json.empty() ? std::string_view("{}") : json);
  } catch (const nlohmann::json::parse_error& e) {
    bad_config(std::string("config is not JSON: ") + e.what());
  }
  if (!doc.is_object()) bad_config("config must be a JSON object");

  PipelineOptions options;
  auto& cfg = options.layout;
  const auto number = [&](const char* key, double& into) {
    if (!doc.contains(key)) return;
    if (!doc[key].is_number()) bad_config(std::string(key) + " must be a number");
    into = doc[key].get<double>();
  };
  const auto text = [&](const char* key) -> std::optional<std::string> {
    if (!doc.contains(key)) return std::nullopt;
    if (!doc[key].is_string()) bad_config(std::string(key) + " must be a string");
    return doc[key].get<std::string>();
  };

  number("minFont", cfg.min_font);
  number("maxFont", cfg.max_font);
  number("width", cfg.width);
  number("height", cfg.height);
  if (doc.contains("topK")) {
    if (!doc["topK"].is_number_integer()) bad_config("topK must be an integer");
    cfg.top_k = doc["topK"].get<int>();
  }
  if (auto v = text("mode")) {
    const auto mode = metrics::parse_mode(*v);
    if (!mode) bad_config("mode must be pos or ner");
    cfg.mode = *mode;
  }
  if (auto v = text("metric")) {
    const auto metric = metrics::parse_metric(*v);
    if (!metric) bad_config("metric must be frequency, sudden or tfidf");
    cfg.metric = *metric;
  }
  if (auto v = text("tokenization")) {
    const auto mode = nlp::parse_tokenization(*v);
    if (!mode) bad_config("tokenization must be word or chunk");
    cfg.tokenization = *mode;
  }
  if (auto v = text("format")) {
    if (*v == "csv") options.format = ingest::TableFormat::Csv;
    else if (*v == "tsv") options.format = ingest::TableFormat::Tsv;
    else bad_config("format must be csv or tsv");
  }
  if (auto v = text("timeColumn")) options.time_column = *v;
  if (auto v = text("textColumn")) options.text_column = *v;
  cfg.validate();
  return options;
}

std::string run_document(std::string_view config_json, std::string_view file_bytes, const nlp::Lexicon& lexicon) {
  const auto options = parse_config_document(config_json);
  return render::emit_json(run_pipeline(file_bytes, options, lexicon).layout);
}

}  // namespace wsm
