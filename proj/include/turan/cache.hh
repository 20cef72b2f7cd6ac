#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "turan/blowup.hh"
#include "turan/graph.hh"

namespace turan {

inline constexpr const char* kToolVersion = "0.1.0";

/// One line of the profile store. Keys and the stored profile are expressed
/// in the canonical labelling of H and T.
struct CacheRecord {
  std::string h_key;
  std::string t_key;
  ExponentProfile profile;
  std::string tool_version;
  std::string timestamp;
};

struct CacheLookup {
  ExponentProfile profile;  // in the caller's labelling of H
  bool hit = false;
  bool stored = false;  // a new line was appended
};

/// $TURAN_CACHE, else $XDG_CACHE_HOME/turan/profiles.jsonl, else
/// $HOME/.cache/turan/profiles.jsonl, else ./turan-profiles.jsonl.
std::filesystem::path default_cache_path();

/// Current UTC time as YYYY-MM-DDTHH:MM:SSZ.
std::string iso8601_now();

/// Looks up (H, T) in a JSON-lines store. Records are trusted only if their
/// keys are canonical and the profile passes verify_profile; anything else is
/// skipped. On a miss the profile is computed and appended under an exclusive
/// advisory lock. If the store cannot be written, a warning goes to `warnings`
/// and the computed profile is still returned.
CacheLookup cache_lookup_or_compute(const Graph& h, const Graph& t,
                                    const std::filesystem::path& store,
                                    std::ostream* warnings = nullptr);

}  // namespace turan
