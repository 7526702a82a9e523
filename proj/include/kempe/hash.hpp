#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>

namespace kempe {

inline constexpr std::uint64_t kFnvOffset = 0xcbf29ce484222325ULL;
inline constexpr std::uint64_t kFnvPrime = 0x100000001b3ULL;

/// FNV-1a, 64-bit.
inline std::uint64_t fnv1a64(std::span<const std::uint8_t> bytes,
                             std::uint64_t h = kFnvOffset) noexcept {
  for (std::uint8_t byte : bytes) {
    h ^= byte;
    h *= kFnvPrime;
  }
  return h;
}

inline std::uint64_t fnv1a64(std::string_view text) noexcept {
  return fnv1a64({reinterpret_cast<const std::uint8_t*>(text.data()), text.size()});
}

/// 16 lowercase hex digits.
std::string to_hex(std::uint64_t value);

}  // namespace kempe
