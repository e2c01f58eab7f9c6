#include <cmath>

#include <json.hpp>

#include "wsm/error.hpp"
#include "wsm/render.hpp"

namespace wsm::render {

namespace {

using Json = nlohmann::ordered_json;

double round6(double v) {
  const double r = std::round(v * 1e6) / 1e6;
  return r == 0 ? 0.0 : r;
}

Json numbers(const std::vector<double>& values) {
  Json out = Json::array();
  for (double v : values) out.push_back(round6(v));
  return out;
}

[[noreturn]] void bad(const std::string& what) { throw Error(Stage::Render, ErrorCode::BadDocument, what); }

template <class T>
T field(const Json& obj, const char* key) {
  if (!obj.is_object() || !obj.contains(key)) bad(std::string("missing key '") + key + "'");
  try {
    return obj.at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    bad(std::string("wrong type for '") + key + "'");
  }
}

metrics::Category category_field(const Json& obj) {
  const auto name = field<std::string>(obj, "category");
  const auto category = metrics::parse_category(name);
  if (!category) bad("unknown category '" + name + "'");
  return *category;
}

}  // namespace

std::string emit_json(const layout::LayoutResult& result) {
  const auto& cfg = result.config;
  Json doc;
  doc["schema"] = kSchemaVersion;
  doc["config"] = Json{{"minFont", round6(cfg.min_font)},
                       {"maxFont", round6(cfg.max_font)},
                       {"topK", cfg.top_k},
                       {"width", round6(cfg.width)},
                       {"height", round6(cfg.height)},
                       {"mode", metrics::to_string(cfg.mode)},
                       {"metric", metrics::to_string(cfg.metric)},
                       {"tokenization", nlp::to_string(cfg.tokenization)}};
  doc["viewport"] = Json{{"width", round6(result.width)}, {"height", round6(result.height)}};
  doc["timeLabels"] = result.time_labels;
  doc["scale"] = round6(result.scale);
  doc["centers"] = numbers(result.centers);

  Json layers = Json::array();
  for (std::size_t i = 0; i < result.layers.size(); ++i) {
    const auto& layer = result.layers[i];
    layers.push_back(Json{{"category", layer.category},
                          {"color", layer_color(i)},
                          {"boxWeights", numbers(layer.box_weights)},
                          {"knotTop", numbers(layer.knot_top)},
                          {"knotBottom", numbers(layer.knot_bottom)},
                          {"x", numbers(layer.x)},
                          {"top", numbers(layer.top)},
                          {"bottom", numbers(layer.bottom)}});
  }
  doc["layers"] = std::move(layers);

  Json words = Json::array();
  for (const auto& w : result.words) {
    words.push_back(Json{{"term", w.term},
                         {"category", metrics::to_string(w.category)},
                         {"boxIndex", w.box},
                         {"rank", w.rank},
                         {"fontSize", round6(w.font_size)},
                         {"x", round6(w.x)},
                         {"y", round6(w.y)},
                         {"w", round6(w.w)},
                         {"h", round6(w.h)},
                         {"metricValue", round6(w.value)},
                         {"color", word_color(metrics::category_slot(w.category), w.rank)}});
  }
  doc["words"] = std::move(words);

  Json dropped = Json::array();
  for (const auto& d : result.dropped) {
    dropped.push_back(Json{{"term", d.term},
                           {"category", metrics::to_string(d.category)},
                           {"boxIndex", d.box},
                           {"rank", d.rank},
                           {"reason", d.reason}});
  }
  doc["dropped"] = std::move(dropped);
  return doc.dump(2) + "\n";
}

layout::LayoutResult parse_json(std::string_view document) {
  Json doc;
  try {
    doc = Json::parse(document);
  } catch (const nlohmann::json::parse_error& e) {
    bad(std::string("not JSON: ") + e.what());
  }
  if (field<std::string>(doc, "schema") != kSchemaVersion) bad("unsupported schema");

  layout::LayoutResult out;
  const Json cfg = field<Json>(doc, "config");
  out.config.min_font = field<double>(cfg, "minFont");
  out.config.max_font = field<double>(cfg, "maxFont");
  out.config.top_k = field<int>(cfg, "topK");
  out.config.width = field<double>(cfg, "width");
  out.config.height = field<double>(cfg, "height");
  const auto mode = metrics::parse_mode(field<std::string>(cfg, "mode"));
  const auto metric = metrics::parse_metric(field<std::string>(cfg, "metric"));
  const auto tokenization = nlp::parse_tokenization(field<std::string>(cfg, "tokenization"));
  if (!mode || !metric || !tokenization) bad("bad config enum");
  out.config.mode = *mode;
  out.config.metric = *metric;
  out.config.tokenization = *tokenization;

  const Json viewport = field<Json>(doc, "viewport");
  out.width = field<double>(viewport, "width");
  out.height = field<double>(viewport, "height");
  out.time_labels = field<std::vector<std::string>>(doc, "timeLabels");
  out.scale = field<double>(doc, "scale");
  out.centers = field<std::vector<double>>(doc, "centers");

  for (const auto& item : field<Json>(doc, "layers")) {
    layout::StreamLayer layer;
    layer.category = field<std::string>(item, "category");
    layer.box_weights = field<std::vector<double>>(item, "boxWeights");
    layer.knot_top = field<std::vector<double>>(item, "knotTop");
    layer.knot_bottom = field<std::vector<double>>(item, "knotBottom");
    layer.x = field<std::vector<double>>(item, "x");
    layer.top = field<std::vector<double>>(item, "top");
    layer.bottom = field<std::vector<double>>(item, "bottom");
    out.layers.push_back(std::move(layer));
  }
  for (const auto& item : field<Json>(doc, "words")) {
    layout::PlacedWord w;
    w.term = field<std::string>(item, "term");
    w.category = category_field(item);
    w.box = field<std::size_t>(item, "boxIndex");
    w.rank = field<std::size_t>(item, "rank");
    w.font_size = field<double>(item, "fontSize");
    w.x = field<double>(item, "x");
    w.y = field<double>(item, "y");
    w.w = field<double>(item, "w");
    w.h = field<double>(item, "h");
    w.value = field<double>(item, "metricValue");
    out.words.push_back(std::move(w));
  }
  for (const auto& item : field<Json>(doc, "dropped")) {
    layout::DroppedWord d;
    d.term = field<std::string>(item, "term");
    d.category = category_field(item);
    d.box = field<std::size_t>(item, "boxIndex");
    d.rank = field<std::size_t>(item, "rank");
    d.reason = field<std::string>(item, "reason");
    out.dropped.push_back(std::move(d));
  }
  return out;
}

}  // namespace wsm::render
