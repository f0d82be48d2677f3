#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "h2r/catalog.hpp"
#include "h2r/geometry.hpp"

namespace h2r {

/// Key-value job description for one CLI command.  Values are parsed and
/// validated before any computation; unknown keys are rejected.
struct JobConfig {
  std::string command;
  std::map<std::string, std::string> kv;

  bool has(const std::string& key) const { return kv.count(key) != 0; }

  // Typed getters; the required forms throw ConfigError when the key is
  // missing, all forms throw on malformed values.
  std::string get_string(const std::string& key, const std::string& fallback) const;
  std::string require_string(const std::string& key) const;
  double get_double(const std::string& key, double fallback) const;
  double require_double(const std::string& key) const;
  int get_int(const std::string& key, int fallback) const;
  int require_int(const std::string& key) const;
  bool get_bool(const std::string& key, bool fallback) const;

  /// Region syntax: [x0,x1]x[y0,y1].
  Region require_region(const std::string& key) const;
  std::optional<Region> get_region(const std::string& key) const;

  /// Interval syntax: [lo,hi].
  std::pair<double, double> require_interval(const std::string& key) const;
  std::optional<std::pair<double, double>> get_interval(const std::string& key) const;

  /// Comma-separated list of reals.
  std::vector<double> require_double_list(const std::string& key) const;

  /// Catalog member from the family/a/b/c/c1/c2/c3/eps_dom keys.
  SolutionSpec require_spec() const;
};

/// Parse `key = value` lines; '#' starts a comment, blank lines ignored.
std::map<std::string, std::string> parse_config_file(const std::string& path);

/// Assemble a job from positional `key=value` arguments layered over an
/// optional config file (arguments override file entries), then validate
/// every key against the command's allowed set.  Throws ConfigError.
JobConfig make_job(const std::string& command, const std::vector<std::string>& kv_args,
                   const std::optional<std::string>& config_file);

/// Allowed config keys of a command; empty if the command is unknown.
std::vector<std::string> allowed_keys(const std::string& command);

/// Resolve an output path against the H2R_OUTPUT_DIR environment variable:
/// relative paths are joined to it when it is set, absolute paths pass
/// through.  The directory is created if missing.
std::string resolve_output_path(const std::string& path);

}  // namespace h2r
