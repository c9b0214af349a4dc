#pragma once

// Job dispatch behind the gcoh executable.  Every job is a subcommand plus a
// JSON input document; reports are deterministic functions of (subcommand,
// canonical input, seed, format).

#include <gcoh/io.hpp>

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace gcoh::cli {

inline constexpr std::uint64_t default_seed = 1;

struct JobSpec {
  std::string subcommand;
  io::Json input = io::Json::object();
  std::uint64_t seed = default_seed;
  std::string format = "json";  // json | table
};

struct JobResult {
  int exit_code = 0;  // 0 ok, 1 internal inconsistency or failed law, 2 invalid input
  std::string output;
};

const std::vector<std::string>& subcommands();

/// Integers become decimal strings; non-integral numbers are rejected.
io::Json canonical_input(const io::Json& input);
/// The string hashed for the cache.
std::string cache_key(const JobSpec& job);
/// 64-bit FNV-1a, hex encoded.
std::string content_hash(const std::string& text);

JobResult run_job(const JobSpec& job);
/// As run_job, served from and stored into `cache_dir` when given.  Corrupt
/// entries are recomputed with a warning on `log`.
JobResult run_job_cached(const JobSpec& job, const std::optional<std::filesystem::path>& cache_dir, std::ostream& log);

/// A manifest is an array of jobs or {"jobs": [...]}; each job is
/// {"subcommand", "input", "seed", "format"}.
std::vector<JobSpec> read_manifest(const io::Json& manifest);
/// Runs jobs on up to `workers` threads.  Exit code is the maximum over jobs,
/// or 2 for an empty manifest.
JobResult run_batch(const std::vector<JobSpec>& jobs, const std::optional<std::filesystem::path>& cache_dir,
                    unsigned workers, std::ostream& log);

/// The command line: gcoh <subcommand> [flags].
int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace gcoh::cli
