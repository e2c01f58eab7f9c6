#include "wsm/error.hpp"

namespace wsm {

std::string_view to_string(Stage stage) {
  switch (stage) {
    case Stage::Ingest: return "ingest";
    case Stage::Nlp: return "nlp";
    case Stage::Metrics: return "metrics";
    case Stage::Layout: return "layout";
    case Stage::Render: return "render";
    case Stage::Config: return "config";
  }
  return "unknown";
}

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::UnknownColumn: return "UnknownColumn";
    case ErrorCode::AllRowsDropped: return "AllRowsDropped";
    case ErrorCode::NoTermsExtracted: return "NoTermsExtracted";
    case ErrorCode::AllWeightsZero: return "AllWeightsZero";
    case ErrorCode::InvalidConfig: return "InvalidConfig";
    case ErrorCode::BadLexicon: return "BadLexicon";
    case ErrorCode::BadDocument: return "BadDocument";
  }
  return "Unknown";
}

Error::Error(Stage stage, ErrorCode code, const std::string& detail)
    : std::runtime_error(std::string(to_string(stage)) + ": " + std::string(to_string(code)) +
                         ": " + detail),
      stage_(stage),
      code_(code),
      detail_(detail) {}

}  // namespace wsm
