#include "linsys/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace linsys {

using ordered_json = nlohmann::ordered_json;

void validate_labeling(const LinearSystem& s, const ConstructionLabeling& labels) {
  if (labels.point_labels.size() != s.num_points() ||
      labels.line_labels.size() != s.num_lines())
    throw Error(ErrorCode::InvalidParameter, "labeling size does not match system");
  const std::set<std::string> pts(labels.point_labels.begin(), labels.point_labels.end());
  const std::set<std::string> lns(labels.line_labels.begin(), labels.line_labels.end());
  if (pts.size() != labels.point_labels.size() || lns.size() != labels.line_labels.size())
    throw Error(ErrorCode::InvalidParameter, "labels are not unique");
}

std::string to_instance_text(const LinearSystem& s) {
  const auto sorted = sort_lines(s);
  ordered_json doc;
  doc["points"] = sorted.system.num_points();
  doc["lines"] = ordered_json::array();
  for (const auto& l : sorted.system.lines()) doc["lines"].push_back(l);
  return doc.dump() + "\n";
}

LinearSystem parse_instance(std::string_view text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::MalformedInput, e.what());
  }
  if (!doc.is_object() || !doc.contains("points") || !doc.contains("lines") ||
      !doc["points"].is_number_unsigned() || !doc["lines"].is_array())
    throw Error(ErrorCode::MalformedInput,
                R"(expected {"points": <non-negative int>, "lines": [[...], ...]})");
  std::vector<Line> lines;
  for (const auto& l : doc["lines"]) {
    if (!l.is_array()) throw Error(ErrorCode::MalformedInput, "line is not an array");
    Line line;
    for (const auto& p : l) {
      if (!p.is_number_unsigned())
        throw Error(ErrorCode::MalformedInput, "point index is not a non-negative integer");
      line.push_back(p.get<Point>());
    }
    lines.push_back(std::move(line));
  }
  return LinearSystem(doc["points"].get<std::size_t>(), std::move(lines));
}

namespace {

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::MalformedInput, "cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void spit(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::InvalidParameter, "cannot write " + path.string());
  out << text;
}

}  // namespace

LinearSystem read_instance(const std::filesystem::path& path) {
  return parse_instance(slurp(path));
}

void write_instance(const std::filesystem::path& path, const LinearSystem& s) {
  spit(path, to_instance_text(s));
}

std::string to_labeling_text(const LinearSystem& s, const ConstructionLabeling& labels) {
  validate_labeling(s, labels);
  const auto sorted = sort_lines(s);
  ordered_json doc;
  doc["name"] = labels.name;
  doc["points"] = ordered_json::array();
  for (std::size_t i = 0; i < labels.point_labels.size(); ++i)
    doc["points"].push_back(ordered_json::array({i, labels.point_labels[i]}));
  doc["lines"] = ordered_json::array();
  for (std::size_t i = 0; i < sorted.order.size(); ++i)
    doc["lines"].push_back(ordered_json::array({i, labels.line_labels[sorted.order[i]]}));
  return doc.dump() + "\n";
}

ConstructionLabeling parse_labeling(std::string_view text) {
  ConstructionLabeling out;
  try {
    const auto doc = ordered_json::parse(text);
    out.name = doc.at("name").get<std::string>();
    for (const auto& e : doc.at("points")) {
      if (e.at(0).get<std::size_t>() != out.point_labels.size())
        throw Error(ErrorCode::MalformedInput, "point labels out of order");
      out.point_labels.push_back(e.at(1).get<std::string>());
    }
    for (const auto& e : doc.at("lines")) {
      if (e.at(0).get<std::size_t>() != out.line_labels.size())
        throw Error(ErrorCode::MalformedInput, "line labels out of order");
      out.line_labels.push_back(e.at(1).get<std::string>());
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::MalformedInput, e.what());
  }
  return out;
}

std::filesystem::path labeling_path(const std::filesystem::path& instance_path) {
  return std::filesystem::path(instance_path.string() + ".labels.json");
}

void write_labeled_instance(const std::filesystem::path& path, const LinearSystem& s,
                            const ConstructionLabeling& labels) {
  const auto labels_text = to_labeling_text(s, labels);
  spit(path, to_instance_text(s));
  spit(labeling_path(path), labels_text);
}

}  // namespace linsys
