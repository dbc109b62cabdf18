#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace origami {

//! Outcome of one verification sweep.  A pass with instances == 0 is
//! vacuous and is flagged in notes so it is distinguishable from a real
//! pass.
struct VerifyReport {
  std::string suite;
  std::string family;
  int n = 0;
  std::uint64_t instances = 0;
  std::vector<std::string> failures;
  std::vector<std::string> notes;

  bool ok() const { return failures.empty(); }
};

}  // namespace origami
