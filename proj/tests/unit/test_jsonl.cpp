#include "core/error.hpp"
#include "io/jsonl.hpp"

#include <doctest.h>

#include <string>

using namespace kxs;

namespace {

std::string msg_of(const std::string& text) {
  try {
    parse_stream_text(text);
  } catch (const Error& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("stream lines parse into elements") {
  auto items = parse_stream_text(
      R"({"id": "u1", "weight": "2.5", "attrs": {"color": "red"}})"
      "\n"
      R"({"id": "u2", "weight": 7, "attrs": {"vertices": ["a", "b"]}})"
      "\n");
  REQUIRE(items.size() == 2);
  CHECK(items[0].id == "u1");
  CHECK(items[0].weight == Weight::parse("2.5"));
  CHECK(std::get<std::string>(items[0].attrs.at("color")) == "red");
  CHECK(items[1].weight == Weight(7));
  CHECK(std::get<std::vector<std::string>>(items[1].attrs.at("vertices")).size() == 2);
}

TEST_CASE("blank lines and surrounding whitespace are tolerated") {
  auto items = parse_stream_text(
      "\n  {\"id\": \"a\", \"weight\": \"1\"}  \r\n\n{\"id\": \"b\", \"weight\": \"2\"}");
  REQUIRE(items.size() == 2);
  CHECK(items[0].id == "a");
  CHECK(items[1].id == "b");
}

TEST_CASE("parse errors carry the line number") {
  CHECK(msg_of("{\"id\": \"a\", \"weight\": \"1\"}\nnot json").find("line 2") !=
        std::string::npos);
  CHECK(msg_of(R"({"id": "a"})").find("weight") != std::string::npos);
  CHECK(msg_of(R"({"weight": "1"})").find("id") != std::string::npos);
  CHECK(msg_of(R"({"id": "", "weight": "1"})").find("empty") != std::string::npos);
  CHECK(msg_of("[1,2]").find("object") != std::string::npos);
}

TEST_CASE("float weights are rejected, integer and string forms accepted") {
  CHECK_THROWS_AS(parse_stream_text(R"({"id": "a", "weight": 0.5})"), Error);
  CHECK(msg_of(R"({"id": "a", "weight": 0.5})").find("float") != std::string::npos);
  CHECK(parse_stream_text(R"({"id": "a", "weight": 12})")[0].weight == Weight(12));
  CHECK(parse_stream_text(R"({"id": "a", "weight": "0.5"})")[0].weight ==
        Weight::parse("0.5"));
}

TEST_CASE("non-positive weights are rejected") {
  CHECK(msg_of(R"({"id": "a", "weight": "0"})").find("positive") != std::string::npos);
  CHECK(msg_of(R"({"id": "a", "weight": "-2"})").find("positive") != std::string::npos);
}

TEST_CASE("duplicate ids report both lines") {
  std::string text =
      "{\"id\": \"a\", \"weight\": \"1\"}\n"
      "{\"id\": \"b\", \"weight\": \"1\"}\n"
      "{\"id\": \"a\", \"weight\": \"2\"}\n";
  std::string msg = msg_of(text);
  CHECK(msg.find("line 3") != std::string::npos);
  CHECK(msg.find("line 1") != std::string::npos);
  CHECK(msg.find("duplicate") != std::string::npos);
}

TEST_CASE("unknown fields and malformed attrs are rejected") {
  CHECK(msg_of(R"({"id": "a", "weight": "1", "wight": "2"})").find("unknown") !=
        std::string::npos);
  CHECK_THROWS_AS(parse_stream_text(R"({"id": "a", "weight": "1", "attrs": []})"), Error);
  CHECK_THROWS_AS(
      parse_stream_text(R"({"id": "a", "weight": "1", "attrs": {"x": 3}})"), Error);
  CHECK_THROWS_AS(
      parse_stream_text(R"({"id": "a", "weight": "1", "attrs": {"x": ["a", 1]}})"),
      Error);
}

TEST_CASE("serialization round-trips byte for byte") {
  std::string text =
      "{\"id\":\"u1\",\"weight\":\"2.5\",\"attrs\":{\"color\":\"red\"}}\n"
      "{\"id\":\"u2\",\"weight\":\"7\",\"attrs\":{\"vertices\":[\"a\",\"b\"]}}\n"
      "{\"id\":\"u3\",\"weight\":\"1/3\"}\n";
  auto items = parse_stream_text(text);
  CHECK(serialize_stream(items) == text);
}
