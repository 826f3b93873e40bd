#pragma once

#include <optional>
#include <string>

namespace stair {

// Content-addressed result cache, enabled when STAIRCASE_CACHE_DIR is set.
// The full key material is stored with the payload, so hash collisions are
// detected rather than served.
bool cache_enabled();
std::optional<std::string> cache_lookup(const std::string& key_material);
void cache_store(const std::string& key_material, const std::string& payload);

} // namespace stair
