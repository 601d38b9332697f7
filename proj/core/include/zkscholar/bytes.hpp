#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace zks {

using Bytes = std::vector<std::uint8_t>;
using ByteView = std::span<const std::uint8_t>;

std::string to_hex(ByteView data);
Bytes from_hex(std::string_view hex);
bool is_hex(std::string_view text);

Bytes utf8_bytes(std::string_view text);

void append(Bytes& out, ByteView data);
void append_u8(Bytes& out, std::uint8_t value);
void append_be16(Bytes& out, std::uint16_t value);
void append_be32(Bytes& out, std::uint32_t value);
void append_be64(Bytes& out, std::uint64_t value);

std::uint16_t read_be16(ByteView in, std::size_t offset);
std::uint32_t read_be32(ByteView in, std::size_t offset);
std::uint64_t read_be64(ByteView in, std::size_t offset);

/// True if needle occurs as a contiguous subsequence of haystack.
bool contains(ByteView haystack, ByteView needle);

}  // namespace zks
