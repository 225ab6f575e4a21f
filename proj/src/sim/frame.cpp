#include "pirlab/sim/frame.hpp"

#include <cstring>

#include "pirlab/algebra/modarith.hpp"

namespace pirlab::sim {

namespace {
constexpr std::uint8_t kMagic[4] = {'P', 'I', 'R', '1'};
}

std::vector<std::uint8_t> encode_frame(const Frame& f) {
  std::vector<std::uint8_t> out(kMagic, kMagic + 4);
  out.push_back(f.type);
  algebra::put_le(f.payload.size(), 4, out);
  out.insert(out.end(), f.payload.begin(), f.payload.end());
  return out;
}

std::optional<HeaderInfo> decode_header(std::span<const std::uint8_t> header) {
  if (header.size() < kHeaderBytes || std::memcmp(header.data(), kMagic, 4) != 0) return std::nullopt;
  const auto length = static_cast<std::uint32_t>(algebra::get_le(header.data() + 5, 4));
  if (length > kMaxPayload) return std::nullopt;
  return HeaderInfo{header[4], length};
}

DecodeResult decode_frame(std::span<const std::uint8_t> buf) {
  DecodeResult r;
  if (buf.size() < kHeaderBytes) {
    r.incomplete = std::memcmp(buf.data(), kMagic, std::min<std::size_t>(buf.size(), 4)) == 0;
    r.bad_header = !r.incomplete;
    return r;
  }
  const auto h = decode_header(buf.first(kHeaderBytes));
  if (!h) {
    r.bad_header = true;
    return r;
  }
  if (buf.size() < kHeaderBytes + h->length) {
    r.incomplete = true;
    return r;
  }
  r.frame = Frame{h->type, {buf.begin() + kHeaderBytes, buf.begin() + kHeaderBytes + h->length}};
  r.consumed = kHeaderBytes + h->length;
  return r;
}

bool known_type(std::uint8_t type) { return type >= 1 && type <= 5; }

Frame error_frame(WireError code, const std::string& message) {
  Frame f{static_cast<std::uint8_t>(MsgType::Error), {static_cast<std::uint8_t>(code)}};
  f.payload.insert(f.payload.end(), message.begin(), message.end());
  return f;
}

std::optional<std::pair<std::uint8_t, std::string>> parse_error(const Frame& f) {
  if (f.payload.empty()) return std::nullopt;
  return std::pair{f.payload[0], std::string(f.payload.begin() + 1, f.payload.end())};
}

}  // namespace pirlab::sim
