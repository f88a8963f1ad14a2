#pragma once

#include <cstddef>
#include <string_view>

#include <Eigen/Core>

#include "clsfront/wav.hpp"

namespace clsfront {

// Mel-cepstrum extraction settings. max_hz <= 0 means the Nyquist rate.
struct MelCepstrumConfig {
  double frame_ms = 25.0;
  double hop_ms = 10.0;
  int mel_bands = 40;
  int cepstra = 24;  // c_1..c_D; c_0 is dropped
  double preemphasis = 0.97;
  double log_floor = 1e-10;
  double min_hz = 0.0;
  double max_hz = 0.0;

  // Throws Errc::malformed_data.
  static MelCepstrumConfig from_json(std::string_view text);

  std::size_t frame_length(int sample_rate) const;
  std::size_t hop_length(int sample_rate) const;
};

// T x D matrix of mel-cepstra, one row per frame.
struct CepstraMatrix {
  Eigen::MatrixXd frames;
  double frame_ms = 0.0;
  double hop_ms = 0.0;

  Eigen::Index count() const noexcept { return frames.rows(); }
  Eigen::Index dims() const noexcept { return frames.cols(); }
};

// floor((samples - frame) / hop) + 1, or 0 when a single frame does not fit.
std::size_t frame_count(std::size_t samples, std::size_t frame, std::size_t hop) noexcept;

// Pre-emphasis, Hamming-windowed frames, magnitude spectrum, triangular mel
// filterbank, floored natural log, orthonormal DCT-II keeping c_1..c_D.
// Throws Errc::too_short when no full frame fits.
CepstraMatrix mel_cepstra(const Signal& signal, const MelCepstrumConfig& config);

}  // namespace clsfront
