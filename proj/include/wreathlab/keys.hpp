#pragma once

#include <cstdint>
#include <string>

// Varint helpers for canonical byte keys.
namespace wreathlab::keys {

inline void append_unsigned(std::string& out, std::uint64_t v) {
  while (v >= 0x80) {
    out.push_back(static_cast<char>((v & 0x7f) | 0x80));
    v >>= 7;
  }
  out.push_back(static_cast<char>(v));
}

inline void append_signed(std::string& out, std::int64_t v) {
  append_unsigned(out, (static_cast<std::uint64_t>(v) << 1) ^ static_cast<std::uint64_t>(v >> 63));
}

}  // namespace wreathlab::keys
