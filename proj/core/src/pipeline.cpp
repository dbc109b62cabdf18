#include "origami/pipeline.hpp"

#include <chrono>
#include <fstream>
#include <stdexcept>
#include <thread>

namespace origami {

namespace fs = std::filesystem;

Family parse_family(const std::string& s) {
  if (s == "jones") {
    return Family::jones;
  }
  if (s == "origami") {
    return Family::origami;
  }
  throw std::invalid_argument("unknown monoid family '" + s + "'");
}

Engine parse_engine(const std::string& s) {
  if (s == "kb") {
    return Engine::kb;
  }
  if (s == "tc") {
    return Engine::tc;
  }
  if (s == "both") {
    return Engine::both;
  }
  throw std::invalid_argument("unknown engine '" + s + "'");
}

Presentation presentation_for(const RunConfig& cfg) {
  return cfg.family == Family::jones
             ? jones_presentation(cfg.n)
             : origami_presentation(cfg.n, cfg.include_redundant);
}

std::string cache_key(const RunConfig& cfg) {
  std::string family = cfg.family == Family::jones ? "jones" : "origami";
  std::string rules = cfg.include_redundant ? "full" : "nored";
  return family + "-n" + std::to_string(cfg.n) + "-" + rules + "-v1.json";
}

namespace {

// Directory-based lock around cache writes; concurrent writers back off.
class CacheLock {
 public:
  explicit CacheLock(fs::path path) : path_(std::move(path)) {
    for (int attempt = 0; attempt < 100; ++attempt) {
      std::error_code ec;
      if (fs::create_directory(path_, ec) && !ec) {
        held_ = true;
        return;
      }
      std::this_thread::sleep_for(std::chrono::milliseconds(100));
    }
    throw std::runtime_error("cache: could not acquire lock at "
                             + path_.string());
  }
  ~CacheLock() {
    if (held_) {
      std::error_code ec;
      fs::remove(path_, ec);
    }
  }
  CacheLock(const CacheLock&) = delete;
  CacheLock& operator=(const CacheLock&) = delete;

 private:
  fs::path path_;
  bool held_ = false;
};

std::optional<MonoidTable> try_load_cache(const RunConfig& cfg) {
  if (!cfg.cache_dir) {
    return std::nullopt;
  }
  fs::path file = *cfg.cache_dir / cache_key(cfg);
  if (!fs::exists(file)) {
    return std::nullopt;
  }
  std::ifstream in(file);
  if (!in) {
    throw std::runtime_error("cache: cannot read " + file.string());
  }
  MonoidTable m = load_monoid_json(in);
  if (m.rank() != cfg.n) {
    throw std::runtime_error("cache: version/content mismatch in "
                             + file.string());
  }
  return m;
}

void store_cache(const RunConfig& cfg, const MonoidTable& m) {
  if (!cfg.cache_dir) {
    return;
  }
  fs::create_directories(*cfg.cache_dir);
  fs::path file = *cfg.cache_dir / cache_key(cfg);
  CacheLock lock(*cfg.cache_dir / (cache_key(cfg) + ".lock"));
  fs::path tmp = file;
  tmp += ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) {
      throw std::runtime_error("cache: cannot write " + tmp.string());
    }
    save_monoid_json(m, out);
  }
  fs::rename(tmp, file);
}

}  // namespace

VerifyReport verify_redundancy(int n, TcOptions options) {
  VerifyReport report{"redundancy", "origami", n, 0, {}, {}};
  MonoidTable full = tc_enumerate(origami_presentation(n, true), options);
  MonoidTable reduced = tc_enumerate(origami_presentation(n, false), options);
  ++report.instances;
  if (full.size() != reduced.size()) {
    report.failures.push_back("sizes differ: " + std::to_string(full.size())
                              + " vs " + std::to_string(reduced.size()));
    return report;
  }
  report.instances += full.size();
  if (!(full == reduced)) {
    report.failures.push_back(
        "tables differ despite equal sizes (representatives or Cayley "
        "structure)");
  }
  return report;
}

EnumerateResult enumerate_monoid(const RunConfig& cfg) {
  if (cfg.n < 2) {
    throw std::invalid_argument("enumerate: n must be at least 2");
  }
  if (cfg.family == Family::origami && cfg.n >= 7 && !cfg.allow_large) {
    throw std::invalid_argument(
        "enumerate: origami n >= 7 is minutes-scale; pass --large to run it");
  }

  EnumerateResult result;
  if (auto cached = try_load_cache(cfg)) {
    result.table = std::move(*cached);
    result.from_cache = true;
    if (cfg.engine == Engine::tc) {
      return result;
    }
  }

  const Presentation p = presentation_for(cfg);

  if (cfg.engine == Engine::kb || cfg.engine == Engine::both) {
    RewriteSystem rs = kb_complete(p, cfg.kb_budget);
    result.kb_completed = rs.complete();
    if (rs.complete()) {
      result.kb_count = count_irreducible(rs);
    } else if (cfg.engine == Engine::kb) {
      throw BudgetError(
          "enumerate: completion did not finish within budget; "
          "use the tc engine or raise --kb-max-rules/--kb-max-pairs");
    }
  }

  if (!result.from_cache) {
    // The table itself always comes from the congruence engine; the
    // rewriting engine contributes the independent count above.
    result.table = tc_enumerate(p, cfg.tc_options);
    store_cache(cfg, result.table);
  }

  if (cfg.engine == Engine::both) {
    if (!result.kb_completed.value_or(false)) {
      throw EngineMismatchError(
          "enumerate --engine both: rewriting engine did not complete, "
          "so the engines cannot be compared");
    }
    if (*result.kb_count != result.table.size()) {
      throw EngineMismatchError(
          "enumerate --engine both: engines disagree: rewriting counts "
          + std::to_string(*result.kb_count) + " but congruence counts "
          + std::to_string(result.table.size()));
    }
  }
  return result;
}

}  // namespace origami
