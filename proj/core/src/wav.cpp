#include "clsfront/wav.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>

#include "clsfront/data_source.hpp"
#include "clsfront/errors.hpp"

namespace clsfront {

namespace {

constexpr std::uint16_t kFormatPcm = 1;
constexpr std::uint16_t kFormatExtensible = 0xFFFE;

std::uint32_t le32(std::string_view b, std::size_t at) {
  return static_cast<std::uint32_t>(static_cast<unsigned char>(b[at])) |
         static_cast<std::uint32_t>(static_cast<unsigned char>(b[at + 1])) << 8 |
         static_cast<std::uint32_t>(static_cast<unsigned char>(b[at + 2])) << 16 |
         static_cast<std::uint32_t>(static_cast<unsigned char>(b[at + 3])) << 24;
}

std::uint16_t le16(std::string_view b, std::size_t at) {
  return static_cast<std::uint16_t>(static_cast<unsigned char>(b[at]) |
                                    static_cast<unsigned char>(b[at + 1]) << 8);
}

void put32(std::string& out, std::uint32_t v) {
  for (int i = 0; i < 4; ++i) out.push_back(static_cast<char>((v >> (8 * i)) & 0xFF));
}

void put16(std::string& out, std::uint16_t v) {
  out.push_back(static_cast<char>(v & 0xFF));
  out.push_back(static_cast<char>(v >> 8));
}

}  // namespace

Signal parse_pcm_wav(std::string_view bytes) {
  if (bytes.size() < 12) {
    throw Error(Errc::truncated_file, "file is " + std::to_string(bytes.size()) + " bytes");
  }
  if (bytes.substr(0, 4) != "RIFF" || bytes.substr(8, 4) != "WAVE") {
    throw Error(Errc::not_wav, "missing RIFF/WAVE header");
  }

  bool have_format = false;
  Signal signal;
  std::size_t pos = 12;
  while (true) {
    if (pos + 8 > bytes.size()) {
      throw Error(Errc::truncated_file, have_format ? "no data chunk" : "no fmt chunk");
    }
    const std::string_view id = bytes.substr(pos, 4);
    const std::uint32_t size = le32(bytes, pos + 4);
    const std::size_t body = pos + 8;

    if (id == "fmt ") {
      if (size < 16 || body + size > bytes.size()) {
        throw Error(Errc::truncated_file, "fmt chunk is incomplete");
      }
      std::uint16_t format = le16(bytes, body);
      const std::uint16_t channels = le16(bytes, body + 2);
      const std::uint32_t rate = le32(bytes, body + 4);
      const std::uint16_t bits = le16(bytes, body + 14);
      if (format == kFormatExtensible && size >= 26) format = le16(bytes, body + 24);
      if (format != kFormatPcm) {
        throw Error(Errc::unsupported_encoding, "format tag " + std::to_string(format) + " is not PCM");
      }
      if (channels != 1) {
        throw Error(Errc::unsupported_encoding, std::to_string(channels) + " channels; mono required");
      }
      if (bits != 16) {
        throw Error(Errc::unsupported_encoding, std::to_string(bits) + "-bit samples; 16-bit required");
      }
      if (rate == 0) throw Error(Errc::unsupported_encoding, "sample rate is zero");
      signal.sample_rate = static_cast<int>(rate);
      have_format = true;
    } else if (id == "data") {
      if (!have_format) throw Error(Errc::not_wav, "data chunk precedes fmt chunk");
      if (body + size > bytes.size()) {
        throw Error(Errc::truncated_file, "data chunk declares " + std::to_string(size) +
                                              " bytes, " + std::to_string(bytes.size() - body) +
                                              " present");
      }
      const std::size_t count = size / 2;
      if (count == 0) throw Error(Errc::truncated_file, "data chunk holds no samples");
      signal.samples.resize(count);
      for (std::size_t i = 0; i < count; ++i) {
        const auto raw = static_cast<std::int16_t>(le16(bytes, body + 2 * i));
        signal.samples[i] = static_cast<double>(raw) / 32768.0;
      }
      return signal;
    }
    pos = body + size + (size & 1);  // chunks are word aligned
  }
}

Signal load_pcm_wav(const std::filesystem::path& path) {
  try {
    return parse_pcm_wav(read_file(path));
  } catch (const Error& e) {
    throw Error(e.code(), path.string() + ": " + e.what());
  }
}

std::string encode_pcm_wav(const Signal& signal) {
  const auto data_bytes = static_cast<std::uint32_t>(signal.samples.size() * 2);
  std::string out;
  out.reserve(44 + data_bytes);
  out += "RIFF";
  put32(out, 36 + data_bytes);
  out += "WAVEfmt ";
  put32(out, 16);
  put16(out, kFormatPcm);
  put16(out, 1);
  put32(out, static_cast<std::uint32_t>(signal.sample_rate));
  put32(out, static_cast<std::uint32_t>(signal.sample_rate) * 2);
  put16(out, 2);
  put16(out, 16);
  out += "data";
  put32(out, data_bytes);
  for (double s : signal.samples) {
    const double scaled = std::round(s * 32768.0);
    const auto q = static_cast<std::int16_t>(std::clamp(scaled, -32768.0, 32767.0));
    put16(out, static_cast<std::uint16_t>(q));
  }
  return out;
}

void write_pcm_wav(const std::filesystem::path& path, const Signal& signal) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(Errc::io_error, "cannot write " + path.string());
  const std::string bytes = encode_pcm_wav(signal);
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw Error(Errc::io_error, "failed writing " + path.string());
}

}  // namespace clsfront
