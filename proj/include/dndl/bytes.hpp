// Copyright (c) 2026 the dndl authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace dndl {

using Bytes = std::vector<std::uint8_t>;
using ByteSpan = std::span<const std::uint8_t>;

inline Bytes to_bytes(std::string_view s) {
  return Bytes(s.begin(), s.end());
}

inline std::string to_string(ByteSpan b) {
  return std::string(reinterpret_cast<const char*>(b.data()), b.size());
}

inline ByteSpan as_span(const Bytes& b) {
  return ByteSpan(b.data(), b.size());
}

inline ByteSpan as_span(std::string_view s) {
  return ByteSpan(reinterpret_cast<const std::uint8_t*>(s.data()), s.size());
}

std::string hex_encode(ByteSpan b);

/// SHA-256 of `b`, lowercase hex. Used as the content hash for code_refs.
std::string sha256_hex(ByteSpan b);

std::string base64_encode(ByteSpan b);
std::optional<Bytes> base64_decode(std::string_view s);

}  // namespace dndl
