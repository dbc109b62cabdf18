#pragma once

// Enumeration pipeline: engine selection (rewriting, congruence, or both
// with a mandatory agreement check), result caching keyed by
// (family, n, redundant-rules flag, format version), and the large-input
// guard.

#include <filesystem>
#include <optional>
#include <string>

#include "origami/congruence.hpp"
#include "origami/presentation.hpp"
#include "origami/report.hpp"
#include "origami/rewrite.hpp"

namespace origami {

enum class Family { jones, origami };
enum class Engine { kb, tc, both };

Family parse_family(const std::string& s);
Engine parse_engine(const std::string& s);

struct RunConfig {
  Family family = Family::origami;
  int n = 2;
  Engine engine = Engine::tc;
  bool include_redundant = true;
  bool allow_large = false;
  std::optional<std::filesystem::path> cache_dir;
  KbBudget kb_budget;
  TcOptions tc_options;
};

//! Thrown when the two engines disagree; never downgraded to a warning.
struct EngineMismatchError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct EnumerateResult {
  MonoidTable table;
  bool from_cache = false;
  //! Engaged when the rewriting engine ran: whether completion succeeded
  //! and how many normal forms it counted.
  std::optional<bool> kb_completed;
  std::optional<std::uint64_t> kb_count;
};

Presentation presentation_for(const RunConfig& cfg);

//! Enumerates per cfg.  Origami ranks >= 7 require allow_large.  With
//! Engine::both, any disagreement between the rewriting count and the
//! congruence table throws EngineMismatchError.
EnumerateResult enumerate_monoid(const RunConfig& cfg);

//! Cache file name for a config, e.g. "origami-n5-full-v1.json".
std::string cache_key(const RunConfig& cfg);

//! Enumerations of O_n with and without rules (2b)/(3b) agree in size,
//! representatives and both Cayley tables.
VerifyReport verify_redundancy(int n, TcOptions options = {});

}  // namespace origami
