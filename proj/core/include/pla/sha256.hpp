// Minimal SHA-256, used for content hashes of configs and reports.

#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace pla {

std::string sha256_hex(std::string_view data);

}  // namespace pla
