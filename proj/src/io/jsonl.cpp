#include "io/jsonl.hpp"

#include "core/error.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>
#include <unordered_map>

namespace kxs {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

std::string at_line(std::size_t line, const std::string& msg) {
  return "stream line " + std::to_string(line) + ": " + msg;
}

Weight weight_from_json(const json& w, std::size_t line) {
  if (w.is_string()) {
    try {
      return Weight::parse(w.get<std::string>());
    } catch (const Error& e) {
      throw_parse(at_line(line, e.what()));
    }
  }
  if (w.is_number_integer()) {
    return Weight(w.get<long long>());
  }
  if (w.is_number_unsigned()) {
    return Weight(static_cast<long long>(w.get<unsigned long long>()));
  }
  if (w.is_number_float()) {
    throw_parse(at_line(line, "weight must be a string or integer, not a float "
                              "(floats are not exact; write \"0.1\" instead)"));
  }
  throw_parse(at_line(line, "weight must be a string or integer"));
}

AttrValue attr_from_json(const json& v, const std::string& key, std::size_t line) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_array()) {
    std::vector<std::string> items;
    items.reserve(v.size());
    for (const auto& x : v) {
      if (!x.is_string()) {
        throw_parse(at_line(line, "attr \"" + key + "\" has a non-string array entry"));
      }
      items.push_back(x.get<std::string>());
    }
    return items;
  }
  throw_parse(at_line(line, "attr \"" + key + "\" must be a string or an array of strings"));
}

}  // namespace

std::vector<Element> parse_stream_text(std::string_view text) {
  std::vector<Element> out;
  std::unordered_map<std::string, std::size_t> seen;  // id -> line
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    std::string_view line = text.substr(
        start, end == std::string_view::npos ? text.size() - start : end - start);
    ++line_no;
    start = end == std::string_view::npos ? text.size() + 1 : end + 1;

    std::string_view trimmed = line;
    while (!trimmed.empty() && (trimmed.back() == '\r' || trimmed.back() == ' ' ||
                                trimmed.back() == '\t')) {
      trimmed.remove_suffix(1);
    }
    while (!trimmed.empty() && (trimmed.front() == ' ' || trimmed.front() == '\t')) {
      trimmed.remove_prefix(1);
    }
    if (trimmed.empty()) continue;

    json obj = json::parse(trimmed, nullptr, false);
    if (obj.is_discarded()) throw_parse(at_line(line_no, "not valid JSON"));
    if (!obj.is_object()) throw_parse(at_line(line_no, "expected a JSON object"));

    Element u;
    if (!obj.contains("id") || !obj["id"].is_string()) {
      throw_parse(at_line(line_no, "missing string field \"id\""));
    }
    u.id = obj["id"].get<std::string>();
    if (u.id.empty()) throw_parse(at_line(line_no, "element id is empty"));

    auto [it, inserted] = seen.emplace(u.id, line_no);
    if (!inserted) {
      throw_parse(at_line(line_no, "duplicate element id \"" + u.id +
                                       "\" (first seen on line " +
                                       std::to_string(it->second) + ")"));
    }

    if (!obj.contains("weight")) throw_parse(at_line(line_no, "missing field \"weight\""));
    u.weight = weight_from_json(obj["weight"], line_no);
    if (!u.weight.is_positive()) {
      throw_parse(at_line(line_no, "weight must be positive, got " + u.weight.str()));
    }

    if (obj.contains("attrs")) {
      const json& attrs = obj["attrs"];
      if (!attrs.is_object()) throw_parse(at_line(line_no, "\"attrs\" must be an object"));
      for (auto it2 = attrs.begin(); it2 != attrs.end(); ++it2) {
        u.attrs.emplace(it2.key(), attr_from_json(it2.value(), it2.key(), line_no));
      }
    }

    for (auto it3 = obj.begin(); it3 != obj.end(); ++it3) {
      const std::string& key = it3.key();
      if (key != "id" && key != "weight" && key != "attrs") {
        throw_parse(at_line(line_no, "unknown field \"" + key + "\""));
      }
    }

    out.push_back(std::move(u));
  }
  return out;
}

std::vector<Element> parse_stream_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw_parse("cannot open stream file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_stream_text(buf.str());
}

std::string element_to_json_line(const Element& u) {
  ordered_json obj;
  obj["id"] = u.id;
  obj["weight"] = u.weight.str();
  if (!u.attrs.empty()) {
    ordered_json attrs = ordered_json::object();
    for (const auto& [key, value] : u.attrs) {
      if (const auto* s = std::get_if<std::string>(&value)) {
        attrs[key] = *s;
      } else {
        attrs[key] = std::get<std::vector<std::string>>(value);
      }
    }
    obj["attrs"] = attrs;
  }
  return obj.dump();
}

std::string serialize_stream(std::span<const Element> items) {
  std::string out;
  for (const Element& u : items) {
    out += element_to_json_line(u);
    out += "\n";
  }
  return out;
}

}  // namespace kxs
