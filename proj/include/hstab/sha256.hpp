#pragma once

#include <string>

namespace hstab {

// SHA-256 digest as a lowercase hex string.
std::string sha256_hex(const std::string& data);

}  // namespace hstab
