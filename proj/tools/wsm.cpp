#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "wsm/error.hpp"
#include "wsm/pipeline.hpp"
#include "wsm/render.hpp"

namespace {

constexpr int kExitInput = 1;
constexpr int kExitUsage = 2;

bool read_file(const std::string& path, std::string& out) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  std::ostringstream buf;
  buf << in.rdbuf();
  out = buf.str();
  return true;
}

bool write_file(const std::string& path, std::string_view data) {
  std::ofstream out(path, std::ios::binary);
  out.write(data.data(), static_cast<std::streamsize>(data.size()));
  return static_cast<bool>(out);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Turns a time-stamped text table into a WordStream layout (SVG and/or JSON)."};
  app.option_defaults()->always_capture_default();

  std::string input, format, time_col, text_col, config_path, out_svg, out_json;
  std::string mode = "pos", metric = "frequency", tokenize = "word";
  double min_font = 12, max_font = 42, width = 1200, height = 600;
  int top_k = 8;
  bool stats = false;

  app.add_option("--input", input, "CSV or TSV file")->required();
  auto* format_opt = app.add_option("--format", format, "csv|tsv (default by extension)")
                         ->check(CLI::IsMember({"csv", "tsv"}));
  auto* time_opt = app.add_option("--time-col", time_col, "time column header");
  auto* text_opt = app.add_option("--text-col", text_col, "text column header");
  auto* mode_opt = app.add_option("--mode", mode, "pos|ner")->check(CLI::IsMember({"pos", "ner"}));
  auto* metric_opt = app.add_option("--metric", metric, "frequency|sudden|tfidf")
                         ->check(CLI::IsMember({"frequency", "sudden", "tfidf"}));
  auto* min_opt = app.add_option("--min-font", min_font, "smallest font size");
  auto* max_opt = app.add_option("--max-font", max_font, "largest font size");
  auto* k_opt = app.add_option("--top-k", top_k, "words per stream per time box");
  auto* width_opt = app.add_option("--width", width, "view width");
  auto* height_opt = app.add_option("--height", height, "view height");
  auto* tok_opt = app.add_option("--tokenize", tokenize, "word|chunk")->check(CLI::IsMember({"word", "chunk"}));
  app.add_option("--config", config_path, "JSON config document; flags given explicitly override it");
  app.add_option("--out-svg", out_svg, "write SVG here");
  app.add_option("--out-json", out_json, "write the layout document here");
  app.add_flag("--stats", stats, "print row/drop/term counts and elapsed time");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  const auto started = std::chrono::steady_clock::now();
  try {
    wsm::PipelineOptions options;
    if (!config_path.empty()) {
      std::string doc;
      if (!read_file(config_path, doc)) {
        std::cerr << "config: cannot read " << config_path << "\n";
        return kExitUsage;
      }
      options = wsm::parse_config_document(doc);
    } else {
      options.format = wsm::ingest::format_from_path(input);
    }
    auto& cfg = options.layout;
    if (format_opt->count()) {
      options.format = format == "tsv" ? wsm::ingest::TableFormat::Tsv : wsm::ingest::TableFormat::Csv;
    } else if (config_path.empty()) {
      options.format = wsm::ingest::format_from_path(input);
    }
    if (time_opt->count()) options.time_column = time_col;
    if (text_opt->count()) options.text_column = text_col;
    if (mode_opt->count() || config_path.empty()) cfg.mode = *wsm::metrics::parse_mode(mode);
    if (metric_opt->count() || config_path.empty()) cfg.metric = *wsm::metrics::parse_metric(metric);
    if (tok_opt->count() || config_path.empty()) cfg.tokenization = *wsm::nlp::parse_tokenization(tokenize);
    if (min_opt->count() || config_path.empty()) cfg.min_font = min_font;
    if (max_opt->count() || config_path.empty()) cfg.max_font = max_font;
    if (k_opt->count() || config_path.empty()) cfg.top_k = top_k;
    if (width_opt->count() || config_path.empty()) cfg.width = width;
    if (height_opt->count() || config_path.empty()) cfg.height = height;
    cfg.validate();

    std::string bytes;
    if (!read_file(input, bytes)) {
      std::cerr << "ingest: cannot read " << input << "\n";
      return kExitInput;
    }
    const auto lexicon = wsm::nlp::Lexicon::load(wsm::nlp::Lexicon::default_directory());
    const auto result = wsm::run_pipeline(bytes, options, lexicon);

    if (!out_svg.empty() && !write_file(out_svg, wsm::render::emit_svg(result.layout))) {
      std::cerr << "render: cannot write " << out_svg << "\n";
      return kExitInput;
    }
    if (!out_json.empty() && !write_file(out_json, wsm::render::emit_json(result.layout))) {
      std::cerr << "render: cannot write " << out_json << "\n";
      return kExitInput;
    }

    if (stats) {
      const auto& s = result.stats;
      const double total =
          std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started).count();
      std::cout << "rows: " << s.rows << " (ragged " << s.ragged_rows << ", blank " << s.dropped_rows << ")\n"
                << "columns: time=" << s.time_column << " text=" << s.text_column << "\n"
                << "boxes: " << s.boxes << "\n"
                << "tokens: " << s.tokens << "\n"
                << "terms: " << s.distinct_terms << "\n"
                << "words: placed " << s.placed << ", dropped " << s.dropped_words << "\n"
                << "elapsed_ms: ingest " << s.ingest_ms << ", nlp " << s.nlp_ms << ", metrics " << s.metrics_ms
                << ", layout " << s.layout_ms << ", extraction " << (s.ingest_ms + s.nlp_ms) << ", total "
                << total << "\n";
    }
  } catch (const wsm::Error& e) {
    std::cerr << e.what() << "\n";
    return e.stage() == wsm::Stage::Config ? kExitUsage : kExitInput;
  }
  return 0;
}
