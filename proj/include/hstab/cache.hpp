#pragma once

#include <functional>
#include <string>

namespace hstab {

// Content-addressed cache of expensive results. An empty directory string
// disables caching silently. Entries are immutable once written; a version
// bump in the key invalidates them wholesale.
struct Cache {
  std::string dir;  // empty = disabled

  static std::string key(const std::string& op, int version, const std::string& canonical_input);

  // Returns the stored value byte-for-byte on a hit; otherwise computes,
  // stores atomically (write-temp then rename) and returns. Corrupt
  // entries are recomputed and overwritten with a warning on stderr.
  std::string get_or_compute(const std::string& key, const std::function<std::string()>& compute,
                             bool* hit = nullptr) const;
};

}  // namespace hstab
