// The C surface: handle lifecycles, status mapping, thread-local error
// text, and report round-trips, exercised the way an FFI consumer would.

#include <kxstream.h>

#include <doctest.h>
#include <json.hpp>

#include <cstring>
#include <string>
#include <vector>

namespace {

constexpr const char* kK22Stream =
    R"({"id": "a-r1", "weight": "4", "attrs": {"vertices": ["a", "r1"]}}
{"id": "a-r2", "weight": "1", "attrs": {"vertices": ["a", "r2"]}}
{"id": "b-r1", "weight": "1", "attrs": {"vertices": ["b", "r1"]}}
{"id": "b-r2", "weight": "4", "attrs": {"vertices": ["b", "r2"]}}
)";

constexpr const char* kMatchingConfig =
    R"({"type": "hypergraph_matching", "k": 2, "params": {"vertex_attr": "vertices"}})";

struct Stream {
  kxs_stream* handle = nullptr;
  ~Stream() { kxs_stream_free(handle); }
};

struct System {
  kxs_system* handle = nullptr;
  ~System() { kxs_system_free(handle); }
};

struct Text {
  char* value = nullptr;
  ~Text() { kxs_string_free(value); }
};

}  // namespace

TEST_CASE("streams parse from text and report their size") {
  Stream stream;
  REQUIRE(kxs_stream_parse_text(kK22Stream, &stream.handle) == KXS_OK);
  CHECK(kxs_stream_size(stream.handle) == 4);
  CHECK(std::strlen(kxs_last_error()) == 0);
}

TEST_CASE("malformed stream text maps to the parse status") {
  Stream stream;
  CHECK(kxs_stream_parse_text("{\"id\": \"x\"", &stream.handle) == KXS_ERR_PARSE);
  CHECK(stream.handle == nullptr);
  CHECK(std::strlen(kxs_last_error()) > 0);

  CHECK(kxs_stream_parse_text(nullptr, &stream.handle) == KXS_ERR_INVALID);
}

TEST_CASE("systems parse from text and expose their parameter") {
  System system;
  REQUIRE(kxs_system_parse_text(kMatchingConfig, &system.handle) == KXS_OK);
  CHECK(kxs_system_k(system.handle) == 2);

  System bad;
  CHECK(kxs_system_parse_text("not json", &bad.handle) == KXS_ERR_PARSE);
  CHECK(kxs_system_parse_text(R"({"type": "wavelet"})", &bad.handle) ==
        KXS_ERR_PARSE);
}

TEST_CASE("null handles are tolerated by accessors and frees") {
  CHECK(kxs_stream_size(nullptr) == 0);
  CHECK(kxs_system_k(nullptr) == 0);
  kxs_stream_free(nullptr);
  kxs_system_free(nullptr);
  kxs_string_free(nullptr);
  CHECK(kxs_version() != nullptr);
}

TEST_CASE("a run round-trips a report through the C boundary") {
  Stream stream;
  System system;
  REQUIRE(kxs_stream_parse_text(kK22Stream, &stream.handle) == KXS_OK);
  REQUIRE(kxs_system_parse_text(kMatchingConfig, &system.handle) == KXS_OK);

  kxs_run_options options{};
  options.algorithm = "exact";
  options.verify = 1;
  Text report;
  REQUIRE(kxs_run(stream.handle, system.handle, &options, &report.value) == KXS_OK);

  const auto parsed = nlohmann::json::parse(report.value);
  CHECK(parsed.at("algorithm") == "exact");
  CHECK(parsed.at("solution") == std::vector<std::string>{"a-r1", "b-r2"});
  CHECK(parsed.at("solution_weight") == "8");
  CHECK(parsed.at("ratio") == "1");

  // Null options select theorem1 with the declared parameter.
  Text defaulted;
  REQUIRE(kxs_run(stream.handle, system.handle, nullptr, &defaulted.value) == KXS_OK);
  CHECK(nlohmann::json::parse(defaulted.value).at("algorithm") == "theorem1");
}

TEST_CASE("run options map their failures onto distinct statuses") {
  Stream stream;
  System system;
  REQUIRE(kxs_stream_parse_text(kK22Stream, &stream.handle) == KXS_OK);
  REQUIRE(kxs_system_parse_text(kMatchingConfig, &system.handle) == KXS_OK);

  kxs_run_options options{};
  Text report;

  options.algorithm = "downhill";
  CHECK(kxs_run(stream.handle, system.handle, &options, &report.value) ==
        KXS_ERR_PARSE);

  options.algorithm = "gog-bounded";
  CHECK(kxs_run(stream.handle, system.handle, &options, &report.value) ==
        KXS_ERR_CONTRACT);

  options.wmin = "1";
  options.wmax = "4x";
  CHECK(kxs_run(stream.handle, system.handle, &options, &report.value) ==
        KXS_ERR_PARSE);

  CHECK(kxs_run(nullptr, system.handle, &options, &report.value) ==
        KXS_ERR_INVALID);
}

TEST_CASE("oversized verification reports the size status") {
  std::string text;
  for (int i = 0; i < 21; ++i) {
    text += "{\"id\": \"e" + std::to_string(i) + "\", \"weight\": \"1\", \"attrs\": " +
            "{\"vertices\": [\"a" + std::to_string(i) + "\", \"b" +
            std::to_string(i) + "\"]}}\n";
  }
  Stream stream;
  System system;
  REQUIRE(kxs_stream_parse_text(text.c_str(), &stream.handle) == KXS_OK);
  REQUIRE(kxs_system_parse_text(kMatchingConfig, &system.handle) == KXS_OK);

  kxs_run_options options{};
  options.verify = 1;
  Text report;
  CHECK(kxs_run(stream.handle, system.handle, &options, &report.value) ==
        KXS_ERR_SIZE);
}

TEST_CASE("system audits pass healthy constraints and flag planted holes") {
  Stream ground;
  System healthy;
  REQUIRE(kxs_stream_parse_text(kK22Stream, &ground.handle) == KXS_OK);
  REQUIRE(kxs_system_parse_text(kMatchingConfig, &healthy.handle) == KXS_OK);

  int passed = 0;
  Text report;
  REQUIRE(kxs_check_system(healthy.handle, ground.handle, &passed, &report.value) ==
          KXS_OK);
  CHECK(passed == 1);
  CHECK(nlohmann::json::parse(report.value).at("passed") == true);

  System broken;
  REQUIRE(kxs_system_parse_text(
              R"({"type": "explicit", "k": 1, "params": {"elements": ["a", "b"],
                  "independent": [["a", "b"]], "closure": false}})",
              &broken.handle) == KXS_OK);
  Stream pair;
  REQUIRE(kxs_stream_parse_text(
              "{\"id\": \"a\", \"weight\": \"2\"}\n{\"id\": \"b\", \"weight\": \"1\"}\n",
              &pair.handle) == KXS_OK);

  Text findings;
  REQUIRE(kxs_check_system(broken.handle, pair.handle, &passed, &findings.value) ==
          KXS_OK);
  CHECK(passed == 0);
  const auto parsed = nlohmann::json::parse(findings.value);
  CHECK(parsed.at("passed") == false);
  CHECK(parsed.at("failures").get<int>() > 0);
  CHECK(std::string(parsed.at("messages")[0]).find("down-closedness") !=
        std::string::npos);
}

TEST_CASE("the verify suite runs through the C boundary") {
  int passed = 0;
  Text report;
  REQUIRE(kxs_verify_suite(9, 2, nullptr, 0, &passed, &report.value) == KXS_OK);
  CHECK(passed == 1);
  CHECK(std::string(report.value).find("10/10 checks passed") != std::string::npos);

  const int bad_k[] = {0};
  CHECK(kxs_verify_suite(9, 1, bad_k, 1, &passed, &report.value) ==
        KXS_ERR_CONTRACT);

  const int odd_k[] = {3};
  Text second;
  REQUIRE(kxs_verify_suite(9, 1, odd_k, 1, &passed, &second.value) == KXS_OK);
  CHECK(passed == 1);
}
