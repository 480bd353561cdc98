#pragma once

#include <string>
#include <vector>

#include "klc/annotations.hpp"

namespace klc {

struct SuiteCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct SuiteReport {
  std::vector<SuiteCheck> checks;
  bool ok() const;
  std::string render() const;
};

/// Empty when the cells of the full Kazhdan-Lusztig ring of D_{2n} are the
/// expected ones: {e} < {middle} < {w0} two-sided, left cells split by right
/// descent and right cells by left descent, the s and t cells incomparable.
std::string check_dihedral_cells(int n);

/// Invariant checks for every module up to `max_n`, and a regression run of
/// the classifier against `annotations`.
SuiteReport run_verification_suite(int max_n, const std::vector<Annotation>& annotations);

}  // namespace klc
