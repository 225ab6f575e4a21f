#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace pirlab::sim {

enum class MsgType : std::uint8_t {
  Query = 0x01,
  Answer = 0x02,
  Error = 0x03,
  Hello = 0x04,
  Config = 0x05,
};

// First payload byte of an ERROR frame.
enum class WireError : std::uint8_t {
  UnknownType = 1,
  Malformed = 2,  // truncated or inconsistent frame, undecodable query
  DigestMismatch = 3,
  Unexpected = 4,
};

inline constexpr std::size_t kHeaderBytes = 9;  // "PIR1", type, u32 length
inline constexpr std::uint32_t kMaxPayload = 1u << 24;

struct Frame {
  std::uint8_t type = 0;
  std::vector<std::uint8_t> payload;

  bool operator==(const Frame&) const = default;
};

std::vector<std::uint8_t> encode_frame(const Frame& f);

struct HeaderInfo {
  std::uint8_t type;
  std::uint32_t length;
};

// Validates the magic and the length bound; nullopt on a bad header.
std::optional<HeaderInfo> decode_header(std::span<const std::uint8_t> header);

struct DecodeResult {
  std::optional<Frame> frame;  // set on success
  std::size_t consumed = 0;
  bool incomplete = false;     // more bytes needed
  bool bad_header = false;
};

// Decodes one frame from the start of buf.
DecodeResult decode_frame(std::span<const std::uint8_t> buf);

bool known_type(std::uint8_t type);

Frame error_frame(WireError code, const std::string& message);

// (code, message) of an ERROR frame; nullopt if the payload is empty.
std::optional<std::pair<std::uint8_t, std::string>> parse_error(const Frame& f);

}  // namespace pirlab::sim
