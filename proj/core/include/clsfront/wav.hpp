#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace clsfront {

struct Signal {
  std::vector<double> samples;  // in [-1, 1)
  int sample_rate = 0;          // Hz
};

// RIFF/WAVE, 16-bit PCM, mono; samples scaled by 1/32768.
// Throws Errc::not_wav, Errc::unsupported_encoding, Errc::truncated_file or
// Errc::io_error.
Signal load_pcm_wav(const std::filesystem::path& path);
Signal parse_pcm_wav(std::string_view bytes);

// 16-bit mono PCM; samples are clipped to the representable range.
std::string encode_pcm_wav(const Signal& signal);
void write_pcm_wav(const std::filesystem::path& path, const Signal& signal);

}  // namespace clsfront
