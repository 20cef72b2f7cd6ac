#include "turan/cache.hh"

#include <fcntl.h>
#include <sys/file.h>
#include <unistd.h>

#include <algorithm>
#include <cerrno>
#include <cstdlib>
#include <cstring>
#include <ctime>
#include <fstream>
#include <optional>
#include <ostream>

#include "turan/canonical.hh"
#include "turan/errors.hh"
#include "turan/graph_io.hh"
#include "turan/report.hh"

namespace turan {

namespace {

std::optional<CacheRecord> parse_record(const std::string& line) {
  const Json j = Json::parse(line, nullptr, false);
  if (j.is_discarded() || !j.is_object()) return std::nullopt;
  try {
    CacheRecord r;
    r.h_key = j.at("H").get<std::string>();
    r.t_key = j.at("T").get<std::string>();
    r.profile = profile_from_json(j.at("profile"));
    r.tool_version = j.value("tool_version", "");
    r.timestamp = j.value("timestamp", "");
    return r;
  } catch (const Json::exception&) {
    return std::nullopt;
  } catch (const ValidationError&) {
    return std::nullopt;
  }
}

bool record_checks_out(const CacheRecord& r) {
  try {
    const Graph h = parse_graph(r.h_key, GraphFormat::kGraph6);
    const Graph t = parse_graph(r.t_key, GraphFormat::kGraph6);
    if (canonical_form(h) != r.h_key || canonical_form(t) != r.t_key)
      return false;
    return verify_profile(h, t, r.profile).ok;
  } catch (const ValidationError&) {
    return false;
  }
}

ExponentProfile relabel_profile(ExponentProfile p,
                                const std::vector<Vertex>& map) {
  for (auto& v : p.witness_U) v = map.at(v);
  std::sort(p.witness_U.begin(), p.witness_U.end());
  return p;
}

void warn(std::ostream* warnings, const std::string& message) {
  if (warnings) *warnings << "warning: " << message << "\n";
}

bool append_line(const std::filesystem::path& store, const std::string& line,
                 std::ostream* warnings) {
  std::error_code ec;
  if (store.has_parent_path())
    std::filesystem::create_directories(store.parent_path(), ec);
  const int fd = ::open(store.c_str(), O_WRONLY | O_APPEND | O_CREAT | O_CLOEXEC, 0644);
  if (fd < 0) {
    warn(warnings, "cache store " + store.string() + " not writable: " +
                       std::strerror(errno));
    return false;
  }
  bool ok = ::flock(fd, LOCK_EX) == 0;
  const std::string data = line + "\n";
  std::size_t written = 0;
  while (ok && written < data.size()) {
    const ssize_t n = ::write(fd, data.data() + written, data.size() - written);
    if (n < 0) {
      if (errno == EINTR) continue;
      ok = false;
    } else {
      written += static_cast<std::size_t>(n);
    }
  }
  if (!ok)
    warn(warnings, "cache store " + store.string() + " write failed: " +
                       std::strerror(errno));
  ::flock(fd, LOCK_UN);
  ::close(fd);
  return ok;
}

}  // namespace

std::filesystem::path default_cache_path() {
  if (const char* env = std::getenv("TURAN_CACHE"); env && *env) return env;
  if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg)
    return std::filesystem::path(xdg) / "turan" / "profiles.jsonl";
  if (const char* home = std::getenv("HOME"); home && *home)
    return std::filesystem::path(home) / ".cache" / "turan" / "profiles.jsonl";
  return "turan-profiles.jsonl";
}

std::string iso8601_now() {
  const std::time_t now = std::time(nullptr);
  std::tm utc{};
  gmtime_r(&now, &utc);
  char buffer[32];
  std::strftime(buffer, sizeof buffer, "%Y-%m-%dT%H:%M:%SZ", &utc);
  return buffer;
}

CacheLookup cache_lookup_or_compute(const Graph& h, const Graph& t,
                                    const std::filesystem::path& store,
                                    std::ostream* warnings) {
  require_pattern(h, "H");
  require_tree_pattern(t);
  const auto h_canon = canonical_labelling(h);
  const std::string t_key = canonical_form(t);

  // perm sends a vertex of H to its canonical position
  std::vector<Vertex> to_original(h.size());
  for (Vertex v = 0; v < h.size(); ++v) to_original[h_canon.perm[v]] = v;

  CacheLookup result;
  if (std::ifstream in{store}) {
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      const auto record = parse_record(line);
      if (!record || record->h_key != h_canon.graph6 || record->t_key != t_key)
        continue;
      if (!record_checks_out(*record)) continue;
      result.profile = relabel_profile(record->profile, to_original);
      result.hit = true;
      return result;
    }
  }

  result.profile = exponent_r(h, t);
  CacheRecord record{h_canon.graph6, t_key,
                     relabel_profile(result.profile, h_canon.perm),
                     kToolVersion, iso8601_now()};
  const Json line{{"H", record.h_key},
                  {"T", record.t_key},
                  {"profile", to_json(record.profile)},
                  {"tool_version", record.tool_version},
                  {"timestamp", record.timestamp}};
  result.stored = append_line(store, line.dump(), warnings);
  return result;
}

}  // namespace turan
