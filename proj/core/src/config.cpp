#include "h2r/config.hpp"

#include <algorithm>
#include <cctype>
#include <cerrno>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace h2r {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

double parse_full_double(const std::string& s, const std::string& key) {
  const std::string t = trim(s);
  if (t.empty()) throw ConfigError("empty value for key '" + key + "'");
  errno = 0;
  char* end = nullptr;
  const double v = std::strtod(t.c_str(), &end);
  if (errno == ERANGE || end != t.c_str() + t.size())
    throw ConfigError("cannot parse '" + t + "' as a number for key '" + key + "'");
  return v;
}

std::pair<double, double> parse_bracket_pair(const std::string& text, const std::string& key) {
  // "[lo,hi]" -> (lo, hi)
  const std::string t = trim(text);
  if (t.size() < 5 || t.front() != '[' || t.back() != ']')
    throw ConfigError("key '" + key + "': expected [lo,hi], got '" + text + "'");
  const std::string inner = t.substr(1, t.size() - 2);
  const auto comma = inner.find(',');
  if (comma == std::string::npos)
    throw ConfigError("key '" + key + "': expected [lo,hi], got '" + text + "'");
  const double lo = parse_full_double(inner.substr(0, comma), key);
  const double hi = parse_full_double(inner.substr(comma + 1), key);
  return {lo, hi};
}

const std::vector<std::string> kSpecKeys = {"family", "a", "b", "c", "c1", "c2", "c3", "eps_dom"};

std::vector<std::string> with_spec_keys(std::initializer_list<const char*> extra) {
  std::vector<std::string> keys = kSpecKeys;
  keys.insert(keys.end(), extra.begin(), extra.end());
  return keys;
}

}  // namespace

std::vector<std::string> allowed_keys(const std::string& command) {
  if (command == "verify") return with_spec_keys({"region", "urange", "points"});
  if (command == "solve")
    return with_spec_keys({"region", "nx", "ny", "bottom", "top", "left", "right", "tol",
                           "max_iter", "out", "report"});
  if (command == "curvature") return with_spec_keys({"at"});
  if (command == "area") return with_spec_keys({"region", "nx", "ny"});
  if (command == "gaussmap") return with_spec_keys({"region", "n", "out"});
  if (command == "export") return with_spec_keys({"region", "urange", "vrange", "nx", "ny", "out"});
  return {};
}

std::string JobConfig::require_string(const std::string& key) const {
  const auto it = kv.find(key);
  if (it == kv.end()) throw ConfigError("missing required key '" + key + "'");
  return it->second;
}

std::string JobConfig::get_string(const std::string& key, const std::string& fallback) const {
  const auto it = kv.find(key);
  return it == kv.end() ? fallback : it->second;
}

double JobConfig::require_double(const std::string& key) const {
  return parse_full_double(require_string(key), key);
}

double JobConfig::get_double(const std::string& key, double fallback) const {
  const auto it = kv.find(key);
  return it == kv.end() ? fallback : parse_full_double(it->second, key);
}

int JobConfig::require_int(const std::string& key) const {
  const double v = require_double(key);
  const int n = static_cast<int>(v);
  if (static_cast<double>(n) != v)
    throw ConfigError("key '" + key + "': expected an integer, got '" + kv.at(key) + "'");
  return n;
}

int JobConfig::get_int(const std::string& key, int fallback) const {
  return has(key) ? require_int(key) : fallback;
}

bool JobConfig::get_bool(const std::string& key, bool fallback) const {
  if (!has(key)) return fallback;
  std::string v = kv.at(key);
  std::transform(v.begin(), v.end(), v.begin(), [](unsigned char ch) { return std::tolower(ch); });
  if (v == "1" || v == "true" || v == "yes" || v == "on") return true;
  if (v == "0" || v == "false" || v == "no" || v == "off") return false;
  throw ConfigError("key '" + key + "': expected a boolean, got '" + kv.at(key) + "'");
}

Region JobConfig::require_region(const std::string& key) const {
  // "[x0,x1]x[y0,y1]"
  const std::string t = trim(require_string(key));
  const auto close1 = t.find(']');
  if (t.empty() || t.front() != '[' || close1 == std::string::npos || close1 + 1 >= t.size() ||
      (t[close1 + 1] != 'x' && t[close1 + 1] != 'X'))
    throw ConfigError("key '" + key + "': expected [x0,x1]x[y0,y1], got '" + t + "'");
  const auto [x0, x1] = parse_bracket_pair(t.substr(0, close1 + 1), key);
  const auto [y0, y1] = parse_bracket_pair(t.substr(close1 + 2), key);
  try {
    return Region{x0, x1, y0, y1};
  } catch (const DomainViolation& e) {
    throw ConfigError("key '" + key + "': " + std::string(e.what()));
  }
}

std::optional<Region> JobConfig::get_region(const std::string& key) const {
  if (!has(key)) return std::nullopt;
  return require_region(key);
}

std::pair<double, double> JobConfig::require_interval(const std::string& key) const {
  const auto [lo, hi] = parse_bracket_pair(require_string(key), key);
  if (!(lo < hi)) throw ConfigError("key '" + key + "': interval must satisfy lo < hi");
  return {lo, hi};
}

std::optional<std::pair<double, double>> JobConfig::get_interval(const std::string& key) const {
  if (!has(key)) return std::nullopt;
  return require_interval(key);
}

std::vector<double> JobConfig::require_double_list(const std::string& key) const {
  const std::string raw = require_string(key);
  std::vector<double> out;
  std::stringstream ss(raw);
  std::string piece;
  while (std::getline(ss, piece, ',')) out.push_back(parse_full_double(piece, key));
  if (out.empty()) throw ConfigError("key '" + key + "': empty list");
  return out;
}

SolutionSpec JobConfig::require_spec() const {
  Family fam = parse_family(require_string("family"));
  try {
    SolutionSpec spec =
        make_spec(fam, get_double("a", 1.0), get_double("b", 0.0), get_double("c", 0.0),
                  get_double("c1", 0.0), get_double("c2", 0.0), get_double("c3", 0.0));
    spec.eps_dom = get_double("eps_dom", spec.eps_dom);
    if (!(spec.eps_dom > 0.0)) throw ConfigError("eps_dom must be positive");
    return spec;
  } catch (const DomainViolation& e) {
    throw ConfigError(e.what());
  }
}

std::map<std::string, std::string> parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  std::map<std::string, std::string> kv;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const std::string t = trim(line);
    if (t.empty()) continue;
    const auto eq = t.find('=');
    if (eq == std::string::npos)
      throw ConfigError(path + ":" + std::to_string(lineno) + ": expected key=value");
    const std::string key = trim(t.substr(0, eq));
    if (key.empty()) throw ConfigError(path + ":" + std::to_string(lineno) + ": empty key");
    kv[key] = trim(t.substr(eq + 1));
  }
  return kv;
}

JobConfig make_job(const std::string& command, const std::vector<std::string>& kv_args,
                   const std::optional<std::string>& config_file) {
  const std::vector<std::string> allowed = allowed_keys(command);
  if (allowed.empty()) throw ConfigError("unknown command '" + command + "'");

  JobConfig cfg;
  cfg.command = command;
  if (config_file) cfg.kv = parse_config_file(*config_file);
  for (const auto& arg : kv_args) {
    const auto eq = arg.find('=');
    if (eq == std::string::npos || eq == 0)
      throw ConfigError("argument '" + arg + "' is not of the form key=value");
    cfg.kv[arg.substr(0, eq)] = arg.substr(eq + 1);
  }
  for (const auto& [key, value] : cfg.kv)
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end())
      throw ConfigError("unknown key '" + key + "' for command '" + command + "'");
  return cfg;
}

std::string resolve_output_path(const std::string& name) {
  namespace fs = std::filesystem;
  fs::path p(name);
  if (const char* dir = std::getenv("H2R_OUTPUT_DIR");
      dir != nullptr && *dir != '\0' && p.is_relative())
    p = fs::path(dir) / p;
  if (p.has_parent_path()) {
    std::error_code ec;
    fs::create_directories(p.parent_path(), ec);
    if (ec) throw ConfigError("cannot create directory '" + p.parent_path().string() + "'");
  }
  return p.string();
}

}  // namespace h2r
