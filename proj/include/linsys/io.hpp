#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "linsys/system.hpp"

namespace linsys {

/// Printable names for the points and lines of a generated system.
struct ConstructionLabeling {
  std::string name;
  std::vector<std::string> point_labels;
  std::vector<std::string> line_labels;
};

/// Throws InvalidParameter if the label counts do not match `s` or a label
/// repeats.
void validate_labeling(const LinearSystem& s, const ConstructionLabeling& labels);

// Instance file: {"points":N,"lines":[[...],...]} on one line, newline
// terminated, lines sorted lexicographically. Writers sort; readers accept any
// line order and validate the system.
std::string to_instance_text(const LinearSystem& s);
LinearSystem parse_instance(std::string_view text);
LinearSystem read_instance(const std::filesystem::path& path);
void write_instance(const std::filesystem::path& path, const LinearSystem& s);

// Labeling sidecar: {"name":...,"points":[[i,"label"],...],"lines":[[i,"label"],...]}.
// Line indices refer to the sorted order used by the instance file.
std::string to_labeling_text(const LinearSystem& s, const ConstructionLabeling& labels);
ConstructionLabeling parse_labeling(std::string_view text);

/// Writes `path` and `path` + ".labels.json".
void write_labeled_instance(const std::filesystem::path& path, const LinearSystem& s,
                            const ConstructionLabeling& labels);

std::filesystem::path labeling_path(const std::filesystem::path& instance_path);

}  // namespace linsys
