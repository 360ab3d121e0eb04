#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "helpers.hpp"

using namespace linsys;
namespace fs = std::filesystem;

TEST_CASE("instance text is compact and sorted") {
  const LinearSystem s(4, {{2, 3}, {0, 1, 2}});
  CHECK(to_instance_text(s) == "{\"points\":4,\"lines\":[[0,1,2],[2,3]]}\n");
  CHECK(parse_instance(to_instance_text(s)) == sort_lines(s).system);
}

TEST_CASE("parse errors carry codes") {
  auto code = [](std::string_view text) {
    try {
      parse_instance(text);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::IndexOutOfRange;
  };
  CHECK(code("{") == ErrorCode::MalformedInput);
  CHECK(code("{\"points\":3}") == ErrorCode::MalformedInput);
  CHECK(code("{\"points\":3,\"lines\":[[0,-1]]}") == ErrorCode::MalformedInput);
  CHECK(code("{\"points\":3,\"lines\":[5]}") == ErrorCode::MalformedInput);
  CHECK(code("{\"points\":3,\"lines\":[[0,1,2],[0,1]]}") == ErrorCode::LinearityViolation);
  CHECK(code("{\"points\":2,\"lines\":[[0,2]]}") == ErrorCode::PointOutOfRange);
}

TEST_CASE("files round-trip byte for byte") {
  const auto dir = fs::temp_directory_path() / "linsys_test_io";
  fs::create_directories(dir);
  const auto b = build_cnn(5);
  const auto path = dir / "c56.json";
  write_labeled_instance(path, b.system, b.labels);
  const auto back = read_instance(path);
  CHECK(back == sort_lines(b.system).system);
  CHECK(to_instance_text(back) == to_instance_text(b.system));

  std::ifstream in(labeling_path(path));
  const std::string text((std::istreambuf_iterator<char>(in)), {});
  const auto labels = parse_labeling(text);
  CHECK(labels.name == b.labels.name);
  CHECK(labels.point_labels == b.labels.point_labels);
  // Line labels follow the sorted line order of the instance file.
  const auto order = sort_lines(b.system).order;
  for (std::size_t i = 0; i < order.size(); ++i)
    CHECK(labels.line_labels[i] == b.labels.line_labels[order[i]]);
  CHECK(to_labeling_text(b.system, b.labels) == text);
  fs::remove_all(dir);
}

TEST_CASE("labelings are validated") {
  const auto s = testing::fano();
  ConstructionLabeling bad{"x", {"a", "b"}, {}};
  CHECK_THROWS_AS(validate_labeling(s, bad), Error);
  ConstructionLabeling dup{"x", {"a", "a", "b", "c", "d", "e", "f"},
                           {"1", "2", "3", "4", "5", "6", "7"}};
  CHECK_THROWS_AS(validate_labeling(s, dup), Error);
}

TEST_CASE("missing files") {
  CHECK_THROWS_AS(read_instance("/nonexistent/x.json"), Error);
}
