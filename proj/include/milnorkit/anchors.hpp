#pragma once

#include <string>
#include <vector>

#include "milnorkit/local_algebra.hpp"

namespace milnorkit {

/// Outcome of one reference check.
struct AnchorResult {
  std::string id;
  std::string tag;       // X9, W10, SUSP, SEARCH
  std::string location;  // where the claim comes from, in words
  std::string claim;
  bool passed = false;
  std::string detail;  // observed values, or the error kind and message
  double elapsed_ms = 0;
};

struct AnchorOptions {
  LocalOptions local;
  /// Run only anchors with this tag (case-insensitive); empty runs all.
  std::string only;
};

std::vector<std::string> anchor_tags();

/// Runs the reference computations for the X9 and W1,0 families. Errors are
/// caught per anchor and reported as failures.
std::vector<AnchorResult> run_anchors(const AnchorOptions& options = {});

}  // namespace milnorkit
