#include "nbhd/io.hpp"

#include <fstream>
#include <limits>
#include <sstream>

#include <json.hpp>

#include "nbhd/error.hpp"

namespace nbhd {

using nlohmann::json;

namespace {

json frame_json(const Frame& frame) {
  json box = json::array();
  for (const Subset s : frame.table()) box.push_back(s.bits());
  return json{{"worlds", frame.worlds()}, {"box", std::move(box)}};
}

json model_json(const Model& m) {
  json doc = frame_json(m.frame());
  json v = json::object();
  for (const auto& [name, value] : m.valuation()) v[name] = value.bits();
  doc["valuation"] = std::move(v);
  return doc;
}

Subset::Bits read_mask(const json& value, const char* what) {
  if (!value.is_number_unsigned() && !(value.is_number_integer() && value.get<long long>() >= 0)) {
    throw FormatError(std::string(what) + " must be a nonnegative integer bitmask");
  }
  const auto raw = value.get<unsigned long long>();
  if (raw > std::numeric_limits<Subset::Bits>::max()) throw FormatError(std::string(what) + " is out of range");
  return static_cast<Subset::Bits>(raw);
}

json parse_document(std::string_view text) {
  try {
    json doc = json::parse(text);
    if (!doc.is_object()) throw FormatError("document must be a JSON object");
    return doc;
  } catch (const json::parse_error& e) {
    throw FormatError(std::string("invalid JSON: ") + e.what());
  }
}

Frame read_frame(const json& doc) {
  if (!doc.contains("worlds") || !doc["worlds"].is_number_integer()) {
    throw FormatError("missing integer field \"worlds\"");
  }
  if (!doc.contains("box") || !doc["box"].is_array()) throw FormatError("missing array field \"box\"");
  const long long n = doc["worlds"].get<long long>();
  if (n < 1 || n > Frame::kMaxWorlds) throw FormatError("\"worlds\" must be in [1, 16]");
  std::vector<Subset> box;
  box.reserve(doc["box"].size());
  for (const auto& entry : doc["box"]) box.emplace_back(read_mask(entry, "box entry"));
  try {
    return Frame(static_cast<int>(n), std::move(box));
  } catch (const FrameError& e) {
    throw FormatError(e.what());
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace

std::string frame_to_json(const Frame& frame) { return frame_json(frame).dump(); }

std::string model_to_json(const Model& m) { return model_json(m).dump(); }

std::string filtration_to_json(const FiltrationResult& fr) {
  json doc = model_json(fr.model);
  json partition = json::array();
  for (const Subset c : fr.partition.classes()) partition.push_back(c.bits());
  doc["partition"] = std::move(partition);
  doc["kind"] = std::string(to_string(fr.kind));
  return doc.dump();
}

Model model_from_json(std::string_view text) {
  const json doc = parse_document(text);
  Frame frame = read_frame(doc);
  Valuation v;
  if (doc.contains("valuation")) {
    const json& entries = doc["valuation"];
    if (!entries.is_object()) throw FormatError("\"valuation\" must be an object");
    for (const auto& [name, value] : entries.items()) v.emplace(name, Subset(read_mask(value, "valuation entry")));
  }
  try {
    return Model(std::move(frame), std::move(v));
  } catch (const FrameError& e) {
    throw FormatError(e.what());
  }
}

Frame frame_from_json(std::string_view text) { return read_frame(parse_document(text)); }

Model load_model(const std::string& path) { return model_from_json(read_file(path)); }

Frame load_frame(const std::string& path) { return frame_from_json(read_file(path)); }

}  // namespace nbhd
