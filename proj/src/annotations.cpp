#include "klc/annotations.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <stdexcept>

namespace klc {

namespace {

// Matrices are given row-major for every non-identity label of the ring.
Annotation make(const std::string& ring_id, int rank,
                const std::map<std::string, std::vector<std::int64_t>>& entries, Status status,
                std::string citation) {
  const BasedRing ring = ring_for_id(ring_id);
  MatrixModule module = zero_module(ring, rank);
  for (const auto& [label, values] : entries) {
    if (static_cast<int>(values.size()) != rank * rank) {
      throw std::invalid_argument("annotation: wrong number of entries for " + label);
    }
    auto& m = module.matrices[ring.index_of(label)];
    for (int i = 0; i < rank; ++i)
      for (int j = 0; j < rank; ++j) m(i, j) = values[i * rank + j];
  }
  return {ring_id, canonical(module), status, std::move(citation)};
}

const char* kExcluded = "categorical exclusion, recorded as data; not derived by the solver";
const char* kCellLe = "cell 2-representation C_{L_e}";
const char* kCellLs = "cell 2-representation C_{L_s}";

}  // namespace

const std::vector<Annotation>& bundled_annotations() {
  static const std::vector<Annotation> data = [] {
    std::vector<Annotation> out;
    out.push_back(make("Q3", 1, {{"s", {0}}}, Status::RealizedCell, kCellLe));
    out.push_back(make("Q3", 1, {{"s", {2}}}, Status::RealizedCell, kCellLs));

    out.push_back(make("Q4", 1, {{"s", {0}}, {"sts", {0}}}, Status::RealizedCell, kCellLe));
    out.push_back(make("Q4", 1, {{"s", {2}}, {"sts", {2}}}, Status::RealizedExtra,
                       "simple transitive 2-representation N, not a cell 2-representation"));
    out.push_back(make("Q4", 2, {{"s", {2, 0, 0, 2}}, {"sts", {0, 2, 2, 0}}},
                       Status::RealizedCell, kCellLs));
    out.push_back(make("Q4", 2, {{"s", {2, 0, 0, 2}}, {"sts", {0, 4, 1, 0}}},
                       Status::Excluded, kExcluded));

    out.push_back(make("Q5", 1, {{"s", {0}}, {"sts", {0}}}, Status::RealizedCell, kCellLe));
    out.push_back(make("Q5", 2, {{"s", {2, 0, 0, 2}}, {"sts", {0, 2, 2, 2}}},
                       Status::RealizedCell, kCellLs));
    out.push_back(make("Q5", 2, {{"s", {2, 0, 0, 2}}, {"sts", {1, 1, 5, 1}}},
                       Status::Excluded, kExcluded));
    out.push_back(make("Q5", 2, {{"s", {2, 0, 0, 2}}, {"sts", {0, 4, 1, 2}}},
                       Status::Excluded, kExcluded));
    out.push_back(make("Q5", 2, {{"s", {2, 0, 0, 2}}, {"sts", {0, 1, 4, 2}}},
                       Status::Excluded, kExcluded));
    return out;
  }();
  return data;
}

bool has_annotations(const std::vector<Annotation>& annotations, const std::string& ring_id) {
  return std::any_of(annotations.begin(), annotations.end(),
                     [&](const Annotation& a) { return a.ring_id == ring_id; });
}

nlohmann::json annotations_to_json(const std::vector<Annotation>& annotations) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& a : annotations) {
    nlohmann::json matrices = nlohmann::json::array();
    for (const auto& m : a.module.matrices) {
      std::vector<std::int64_t> flat;
      for (int i = 0; i < a.module.rank; ++i)
        for (int j = 0; j < a.module.rank; ++j) flat.push_back(m(i, j));
      matrices.push_back(flat);
    }
    out.push_back({{"ring", a.ring_id},
                   {"rank", a.module.rank},
                   {"matrices", matrices},
                   {"status", to_string(a.status)},
                   {"citation", a.citation}});
  }
  return out;
}

std::vector<Annotation> annotations_from_json(const nlohmann::json& j) {
  std::vector<Annotation> out;
  try {
    for (const auto& item : j) {
      Annotation a;
      a.ring_id = item.at("ring").get<std::string>();
      a.module.rank = item.at("rank").get<int>();
      const int rank = a.module.rank;
      if (rank < 1) throw std::invalid_argument("annotation: rank must be positive");
      for (const auto& flat : item.at("matrices")) {
        auto values = flat.get<std::vector<std::int64_t>>();
        if (static_cast<int>(values.size()) != rank * rank) {
          throw std::invalid_argument("annotation: matrix has wrong size");
        }
        IntMatrix m(rank, rank);
        for (int r = 0; r < rank; ++r)
          for (int c = 0; c < rank; ++c) m(r, c) = values[r * rank + c];
        a.module.matrices.push_back(std::move(m));
      }
      a.module = canonical(a.module);
      a.status = status_from_string(item.at("status").get<std::string>());
      a.citation = item.value("citation", "");
      out.push_back(std::move(a));
    }
  } catch (const nlohmann::json::exception& ex) {
    throw std::invalid_argument(std::string("annotation data: ") + ex.what());
  }
  return out;
}

std::vector<Annotation> load_annotations_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open annotation file '" + path + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::parse_error& ex) {
    throw std::invalid_argument("annotation file '" + path + "': " + ex.what());
  }
  return annotations_from_json(j);
}

}  // namespace klc
