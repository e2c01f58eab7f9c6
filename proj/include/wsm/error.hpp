#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace wsm {

enum class Stage { Ingest, Nlp, Metrics, Layout, Render, Config };

enum class ErrorCode {
  EmptyInput,
  UnknownColumn,
  AllRowsDropped,
  NoTermsExtracted,
  AllWeightsZero,
  InvalidConfig,
  BadLexicon,
  BadDocument,
};

std::string_view to_string(Stage stage);
std::string_view to_string(ErrorCode code);

// Every pipeline failure surfaces as this exception; `what()` is a one-line
// message that already names the stage.
class Error : public std::runtime_error {
 public:
  Error(Stage stage, ErrorCode code, const std::string& detail);

  Stage stage() const noexcept { return stage_; }
  ErrorCode code() const noexcept { return code_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  Stage stage_;
  ErrorCode code_;
  std::string detail_;
};

}  // namespace wsm
