#include "clsfront/cepstra.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include <json.hpp>
#include <unsupported/Eigen/FFT>

#include "clsfront/errors.hpp"

namespace clsfront {

namespace {

double hz_to_mel(double hz) { return 2595.0 * std::log10(1.0 + hz / 700.0); }
double mel_to_hz(double mel) { return 700.0 * (std::pow(10.0, mel / 2595.0) - 1.0); }

std::size_t next_pow2(std::size_t n) {
  std::size_t p = 1;
  while (p < n) p <<= 1;
  return p;
}

// bands x (fft/2 + 1) triangular weights on an HTK mel scale.
Eigen::MatrixXd mel_filterbank(int bands, std::size_t fft_size, int sample_rate, double min_hz,
                               double max_hz) {
  const std::size_t bins = fft_size / 2 + 1;
  const double lo = hz_to_mel(min_hz);
  const double hi = hz_to_mel(max_hz);
  std::vector<double> edges(static_cast<std::size_t>(bands) + 2);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    edges[i] = mel_to_hz(lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(bands + 1));
  }
  Eigen::MatrixXd fb = Eigen::MatrixXd::Zero(bands, static_cast<Eigen::Index>(bins));
  for (int m = 0; m < bands; ++m) {
    const double left = edges[m], centre = edges[m + 1], right = edges[m + 2];
    for (std::size_t k = 0; k < bins; ++k) {
      const double f = static_cast<double>(k) * sample_rate / static_cast<double>(fft_size);
      double w = 0.0;
      if (f > left && f <= centre) {
        w = (f - left) / (centre - left);
      } else if (f > centre && f < right) {
        w = (right - f) / (right - centre);
      }
      fb(m, static_cast<Eigen::Index>(k)) = w;
    }
  }
  return fb;
}

// Rows 1..count of the orthonormal DCT-II basis over `bands` inputs.
Eigen::MatrixXd dct_rows(int count, int bands) {
  Eigen::MatrixXd dct(count, bands);
  const double scale = std::sqrt(2.0 / bands);
  for (int n = 1; n <= count; ++n) {
    for (int m = 0; m < bands; ++m) {
      dct(n - 1, m) = scale * std::cos(std::numbers::pi * n * (m + 0.5) / bands);
    }
  }
  return dct;
}

}  // namespace

MelCepstrumConfig MelCepstrumConfig::from_json(std::string_view text) {
  MelCepstrumConfig c;
  try {
    const auto doc = nlohmann::json::parse(text);
    c.frame_ms = doc.value("frame_ms", c.frame_ms);
    c.hop_ms = doc.value("hop_ms", c.hop_ms);
    c.mel_bands = doc.value("mel_bands", c.mel_bands);
    c.cepstra = doc.value("cepstra", c.cepstra);
    c.preemphasis = doc.value("preemphasis", c.preemphasis);
    c.log_floor = doc.value("log_floor", c.log_floor);
    c.min_hz = doc.value("min_hz", c.min_hz);
    c.max_hz = doc.value("max_hz", c.max_hz);
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::malformed_data, std::string("mcd config: ") + e.what());
  }
  if (c.frame_ms <= 0 || c.hop_ms <= 0 || c.mel_bands < 2 || c.cepstra < 1 ||
      c.cepstra >= c.mel_bands || c.log_floor <= 0) {
    throw Error(Errc::malformed_data, "mcd config: inconsistent settings");
  }
  return c;
}

std::size_t MelCepstrumConfig::frame_length(int sample_rate) const {
  return static_cast<std::size_t>(std::lround(sample_rate * frame_ms / 1000.0));
}

std::size_t MelCepstrumConfig::hop_length(int sample_rate) const {
  return static_cast<std::size_t>(std::lround(sample_rate * hop_ms / 1000.0));
}

std::size_t frame_count(std::size_t samples, std::size_t frame, std::size_t hop) noexcept {
  if (frame == 0 || hop == 0 || samples < frame) return 0;
  return (samples - frame) / hop + 1;
}

CepstraMatrix mel_cepstra(const Signal& signal, const MelCepstrumConfig& config) {
  if (signal.sample_rate <= 0) throw Error(Errc::too_short, "signal has no sample rate");
  const std::size_t frame = config.frame_length(signal.sample_rate);
  const std::size_t hop = config.hop_length(signal.sample_rate);
  const std::size_t frames = frame_count(signal.samples.size(), frame, hop);
  if (frames == 0) {
    throw Error(Errc::too_short, std::to_string(signal.samples.size()) +
                                     " samples do not fill one " + std::to_string(frame) +
                                     "-sample frame");
  }

  const std::size_t fft_size = next_pow2(frame);
  const std::size_t bins = fft_size / 2 + 1;
  const double nyquist = signal.sample_rate / 2.0;
  const double max_hz = config.max_hz > 0.0 ? std::min(config.max_hz, nyquist) : nyquist;
  const Eigen::MatrixXd fb =
      mel_filterbank(config.mel_bands, fft_size, signal.sample_rate, config.min_hz, max_hz);
  const Eigen::MatrixXd dct = dct_rows(config.cepstra, config.mel_bands);

  std::vector<double> emphasized(signal.samples.size());
  emphasized[0] = signal.samples[0];
  for (std::size_t i = 1; i < signal.samples.size(); ++i) {
    emphasized[i] = signal.samples[i] - config.preemphasis * signal.samples[i - 1];
  }

  std::vector<double> window(frame);
  for (std::size_t n = 0; n < frame; ++n) {
    window[n] = frame == 1 ? 1.0
                           : 0.54 - 0.46 * std::cos(2.0 * std::numbers::pi * static_cast<double>(n) /
                                                    static_cast<double>(frame - 1));
  }

  Eigen::FFT<double> fft;
  std::vector<double> buffer(fft_size);
  std::vector<std::complex<double>> spectrum;
  Eigen::VectorXd magnitude(static_cast<Eigen::Index>(bins));

  CepstraMatrix out;
  out.frame_ms = config.frame_ms;
  out.hop_ms = config.hop_ms;
  out.frames.resize(static_cast<Eigen::Index>(frames), config.cepstra);
  for (std::size_t t = 0; t < frames; ++t) {
    const std::size_t start = t * hop;
    std::fill(buffer.begin(), buffer.end(), 0.0);
    for (std::size_t n = 0; n < frame; ++n) buffer[n] = emphasized[start + n] * window[n];
    fft.fwd(spectrum, buffer);
    for (std::size_t k = 0; k < bins; ++k) magnitude(static_cast<Eigen::Index>(k)) = std::abs(spectrum[k]);
    Eigen::VectorXd log_energy = (fb * magnitude).array().max(config.log_floor).log().matrix();
    out.frames.row(static_cast<Eigen::Index>(t)) = (dct * log_energy).transpose();
  }
  return out;
}

}  // namespace clsfront
