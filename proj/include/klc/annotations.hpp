#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "klc/classifier.hpp"

namespace klc {

/// Known fate of one candidate module. Exclusions come from categorical
/// arguments that the solver cannot reproduce; they are recorded, not derived.
struct Annotation {
  std::string ring_id;
  MatrixModule module;
  Status status = Status::Unresolved;
  std::string citation;
};

/// Complete expected outcome for Q3, Q4 and Q5 under the default filters.
const std::vector<Annotation>& bundled_annotations();

/// Whether `ring_id` has annotation data in `annotations`.
bool has_annotations(const std::vector<Annotation>& annotations, const std::string& ring_id);

nlohmann::json annotations_to_json(const std::vector<Annotation>& annotations);
std::vector<Annotation> annotations_from_json(const nlohmann::json& j);
std::vector<Annotation> load_annotations_file(const std::string& path);

}  // namespace klc
