#include "hstab/cache.hpp"

#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <unistd.h>

#include "hstab/sha256.hpp"

namespace hstab {

namespace fs = std::filesystem;

std::string Cache::key(const std::string& op, int version, const std::string& canonical_input) {
  return sha256_hex(op + "\n" + std::to_string(version) + "\n" + canonical_input);
}

std::string Cache::get_or_compute(const std::string& key,
                                  const std::function<std::string()>& compute,
                                  bool* hit) const {
  if (hit) *hit = false;
  if (dir.empty()) return compute();

  fs::path entry = fs::path(dir) / (key + ".json");
  if (fs::exists(entry)) {
    std::ifstream in(entry, std::ios::binary);
    std::string content((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    try {
      auto j = nlohmann::json::parse(content);
      if (j.at("key").get<std::string>() == key) {
        if (hit) *hit = true;
        return j.at("value").get<std::string>();
      }
      std::cerr << "cache: key mismatch in " << entry.string() << ", recomputing\n";
    } catch (const std::exception&) {
      std::cerr << "cache: corrupt entry " << entry.string() << ", recomputing\n";
    }
  }

  std::string value = compute();
  std::error_code ec;
  fs::create_directories(dir, ec);
  nlohmann::json j;
  j["key"] = key;
  j["value"] = value;
  fs::path tmp = entry;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary);
    out << j.dump();
  }
  fs::rename(tmp, entry, ec);  // atomic publish; concurrent writers race benignly
  if (ec) fs::remove(tmp, ec);
  return value;
}

}  // namespace hstab
