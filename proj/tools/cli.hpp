// Copyright 2026 The asnkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Pipeline orchestration behind the `asnkit` executable. Every command builds
// its artifacts in memory as a Bundle (relative path -> bytes) before anything
// touches the disk, which keeps the output order and content deterministic.

#include <cstdint>
#include <iosfwd>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "asnkit/asn.hpp"
#include "asnkit/corpus.hpp"
#include "asnkit/error.hpp"
#include "asnkit/graph_stats.hpp"
#include "asnkit/powerlaw.hpp"
#include "json.hpp"

namespace asnkit::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitUsage = 2;

/// Unreadable input or unwritable output; maps to exit code 2.
class IoError : public Error {
 public:
  using Error::Error;
};

/// Bad configuration value or unknown key; maps to exit code 2.
class UsageError : public Error {
 public:
  using Error::Error;
};

struct RunConfig {
  std::vector<std::string> inputs;
  MissingPolicy missing = MissingPolicy::kDropAny;
  bool unweighted = false;
  DegreeVariable degree = DegreeVariable::kTotal;
  int replicates = 1000;  // 0 skips the bootstrap
  std::uint64_t seed = 1;
  int band = 10;
  int min_gain = 5;
  bool flag_initial = false;
  bool strict = false;  // plausibility gate at p >= 0.1 instead of 0.01
  std::string out = "asnkit-out";
  std::set<std::string> formats = {"csv", "dot", "graphml"};
  std::vector<NodeKey> track;
  std::vector<Alternative> alternatives = {Alternative::kExponential, Alternative::kLognormal};
  unsigned threads = 0;
  double bin_width = 0.5;

  double p_threshold() const { return strict ? 0.1 : 0.01; }
};

/// Sets one `key = value` entry. Throws UsageError on unknown keys or bad values.
void apply_setting(RunConfig& config, const std::string& key, const std::string& value);

/// Reads `key = value` lines; blank lines and lines starting with '#' are skipped.
/// `input` may repeat and accumulates.
void load_config(RunConfig& config, std::istream& in, const std::string& source);
void load_config_file(RunConfig& config, const std::string& path);

/// Config as recorded in manifests: every field except the output directory,
/// so that bundles written to different places compare equal.
nlohmann::ordered_json config_json(const RunConfig& config);

using Bundle = std::map<std::string, std::string>;

void write_bundle(const Bundle& bundle, const std::string& directory);

/// Reads and filters all inputs. Throws IoError when a file cannot be opened
/// and Error (with file:line) on malformed input or an empty corpus.
std::vector<CorpusSlice> load_corpus(const RunConfig& config);

struct ValidationReport {
  std::vector<std::string> rows;  // "file:line: message"
  std::int64_t sentences = 0;
  std::int64_t filtered = 0;
};
ValidationReport validate_inputs(const std::vector<std::string>& paths, MissingPolicy policy);

/// Outcome of a bundle-producing command. `status` is kExitDomain when part of
/// the analysis failed (for example a century too small to fit); the bundle then
/// still holds everything that could be computed, and `problems` says what failed.
struct CommandResult {
  Bundle bundle;
  int status = kExitOk;
  std::vector<std::string> problems;
};

CommandResult cmd_build(const RunConfig& config, const std::vector<CorpusSlice>& slices);
CommandResult cmd_export(const RunConfig& config, const std::vector<CorpusSlice>& slices);
CommandResult cmd_stats(const RunConfig& config, const std::vector<CorpusSlice>& slices);
CommandResult cmd_hierarchy(const RunConfig& config, const std::vector<CorpusSlice>& slices);
CommandResult cmd_powerlaw(const RunConfig& config, const std::vector<CorpusSlice>& slices);
CommandResult cmd_diachrony(const RunConfig& config, const std::vector<CorpusSlice>& slices);
CommandResult cmd_analyze(const RunConfig& config, const std::vector<CorpusSlice>& slices);

/// Entry point used by main(); returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace asnkit::cli
