#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>

#include <json.hpp>

#include "support.hpp"
#include "wsm/error.hpp"
#include "wsm/pipeline.hpp"
#include "wsm/render.hpp"

namespace wsm {
namespace {

namespace fs = std::filesystem;

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("wsm_test_" + std::to_string(::getpid()) + "_" + std::to_string(counter()++));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  static int& counter() {
    static int n = 0;
    return n;
  }
};

int run_cli(const std::string& args, const fs::path& log) {
  const std::string cmd = std::string("\"") + WSM_TEST_CLI + "\" " + args + " >\"" + log.string() + "\" 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

TEST(Pipeline, SampleDefaultsPickWeekAndResponse) {
  const auto result = run_pipeline(test::sample_csv(), PipelineOptions{}, test::lexicon());
  EXPECT_EQ(result.stats.time_column, "Week");
  EXPECT_EQ(result.stats.text_column, "Response");
  EXPECT_EQ(result.stats.rows, 63u);
  EXPECT_EQ(result.stats.boxes, 9u);
  EXPECT_EQ(result.layout.time_labels.front(), "1");
  EXPECT_EQ(result.layout.time_labels.back(), "9");
  EXPECT_FALSE(result.layout.words.empty());
}

TEST(Pipeline, ErrorsNameTheirStage) {
  PipelineOptions options;
  try {
    run_pipeline("", options, test::lexicon());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.stage(), Stage::Ingest);
    EXPECT_EQ(e.code(), ErrorCode::EmptyInput);
    EXPECT_NE(std::string(e.what()).find("ingest"), std::string::npos);
  }
  options.layout.mode = metrics::Mode::Ner;
  try {
    run_pipeline("t,text\n1,the data\n", options, test::lexicon());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.stage(), Stage::Metrics);
    EXPECT_EQ(e.code(), ErrorCode::NoTermsExtracted);
  }
}

TEST(ConfigDocument, ParsesKnownKeys) {
  const auto options = parse_config_document(
      R"({"minFont":10,"maxFont":30,"topK":4,"width":800,"height":400,"mode":"ner","metric":"tfidf",)"
      R"("tokenization":"chunk","format":"tsv","timeColumn":"T","textColumn":"X"})");
  EXPECT_EQ(options.layout.min_font, 10);
  EXPECT_EQ(options.layout.max_font, 30);
  EXPECT_EQ(options.layout.top_k, 4);
  EXPECT_EQ(options.layout.width, 800);
  EXPECT_EQ(options.layout.mode, metrics::Mode::Ner);
  EXPECT_EQ(options.layout.metric, metrics::Metric::TfIdf);
  EXPECT_EQ(options.layout.tokenization, nlp::Tokenization::NounChunk);
  EXPECT_EQ(options.format, ingest::TableFormat::Tsv);
  EXPECT_EQ(options.time_column, "T");
  EXPECT_EQ(options.text_column, "X");
  EXPECT_EQ(parse_config_document("{}").layout, layout::LayoutConfig{});
  EXPECT_EQ(parse_config_document("").layout, layout::LayoutConfig{});
}

TEST(ConfigDocument, RejectsBadValues) {
  for (const char* doc : {"[1]", "{\"minFont\":\"x\"}", "{\"mode\":\"both\"}", "{\"minFont\":50,\"maxFont\":10}",
                          "{\"topK\":2.5}", "{\"format\":\"xls\"}", "not json"}) {
    try {
      parse_config_document(doc);
      FAIL() << doc;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::InvalidConfig) << doc;
      EXPECT_EQ(e.stage(), Stage::Config) << doc;
    }
  }
}

TEST(RunDocument, TsvInputThroughTheBoundary) {
  const std::string tsv = "when\twhat\n1\tGoogle helps students search data\n2\tStudents share data with Google\n";
  const auto doc = nlohmann::json::parse(run_document(R"({"format":"tsv","mode":"ner"})", tsv, test::lexicon()));
  EXPECT_EQ(doc["schema"], "layout-schema v1");
  EXPECT_EQ(doc["timeLabels"], (nlohmann::json{"1", "2"}));
  ASSERT_FALSE(doc["words"].empty());
  EXPECT_EQ(doc["words"][0]["term"], "google");
}

TEST(RunDocument, MatchesDirectPipeline) {
  const auto csv = test::sample_csv();
  const auto direct = render::emit_json(run_pipeline(csv, PipelineOptions{}, test::lexicon()).layout);
  EXPECT_EQ(run_document("{}", csv, test::lexicon()), direct);
}

TEST(Cli, HappyPathWritesSvgAndJson) {
  TempDir dir;
  const auto svg = dir.path / "out.svg";
  const auto json = dir.path / "out.json";
  const int code = run_cli(std::string("--input \"") + WSM_TEST_SAMPLE_CSV + "\" --time-col Week --text-col Response --out-svg \"" +
                               svg.string() + "\" --out-json \"" + json.string() + "\"",
                           dir.path / "log");
  EXPECT_EQ(code, 0) << test::read_file((dir.path / "log").string());
  EXPECT_TRUE(fs::exists(svg));
  EXPECT_GT(fs::file_size(svg), 1000u);
  // defaults match an empty config document
  EXPECT_EQ(test::read_file(json.string()), run_document("{}", test::sample_csv(), test::lexicon()));
}

TEST(Cli, FontInvariantIsExit2) {
  TempDir dir;
  const int code = run_cli(std::string("--input \"") + WSM_TEST_SAMPLE_CSV + "\" --min-font 50 --max-font 10", dir.path / "log");
  EXPECT_EQ(code, 2);
  EXPECT_NE(test::read_file((dir.path / "log").string()).find("min-font"), std::string::npos);
}

TEST(Cli, BadFlagsAreExit2) {
  TempDir dir;
  EXPECT_EQ(run_cli("--input x.csv --mode sideways", dir.path / "log"), 2);
  EXPECT_EQ(run_cli("--input x.csv --top-k many", dir.path / "log"), 2);
  EXPECT_EQ(run_cli("--no-such-flag", dir.path / "log"), 2);
  EXPECT_EQ(run_cli("", dir.path / "log"), 2);
}

TEST(Cli, InputErrorsAreExit1WithStage) {
  TempDir dir;
  const auto empty = dir.path / "empty.csv";
  { std::ofstream(empty.string()); }
  EXPECT_EQ(run_cli("--input \"" + empty.string() + "\"", dir.path / "log"), 1);
  EXPECT_EQ(test::read_file((dir.path / "log").string()).rfind("ingest:", 0), 0u);

  EXPECT_EQ(run_cli("--input \"" + (dir.path / "missing.csv").string() + "\"", dir.path / "log"), 1);

  EXPECT_EQ(run_cli(std::string("--input \"") + WSM_TEST_SAMPLE_CSV + "\" --text-col Nope", dir.path / "log"), 1);
  EXPECT_NE(test::read_file((dir.path / "log").string()).find("UnknownColumn"), std::string::npos);
}

TEST(Cli, StatsReportsCountsAndTime) {
  TempDir dir;
  const auto log = dir.path / "log";
  ASSERT_EQ(run_cli(std::string("--input \"") + WSM_TEST_SAMPLE_CSV + "\" --stats --mode ner", log), 0);
  const auto out = test::read_file(log.string());
  EXPECT_NE(out.find("rows: 63"), std::string::npos);
  EXPECT_NE(out.find("boxes: 9"), std::string::npos);
  EXPECT_NE(out.find("elapsed_ms:"), std::string::npos);
}

TEST(Cli, ConfigFileWithFlagOverride) {
  TempDir dir;
  const auto cfg = dir.path / "cfg.json";
  std::ofstream(cfg.string()) << R"({"mode":"ner","topK":3})";
  const auto json = dir.path / "out.json";
  ASSERT_EQ(run_cli(std::string("--input \"") + WSM_TEST_SAMPLE_CSV + "\" --config \"" + cfg.string() +
                        "\" --top-k 2 --out-json \"" + json.string() + "\"",
                    dir.path / "log"),
            0);
  const auto doc = nlohmann::json::parse(test::read_file(json.string()));
  EXPECT_EQ(doc["config"]["mode"], "ner");
  EXPECT_EQ(doc["config"]["topK"], 2);
}

}  // namespace
}  // namespace wsm
