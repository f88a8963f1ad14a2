#pragma once

#include <cmath>
#include <cstddef>
#include <numbers>

#include "clsfront/cepstra.hpp"
#include "clsfront/dtw.hpp"
#include "clsfront/wav.hpp"

namespace clsfront {

// (10 / ln 10) * sqrt(2): dB scale applied to the Euclidean cepstral distance.
inline const double kMcdScale = 10.0 / std::numbers::ln10 * std::numbers::sqrt2;

struct McdResult {
  double mcd_db = 0.0;  // mean per-pair distortion along the DTW path
  std::size_t path_length = 0;
  std::size_t ref_frames = 0;
  std::size_t syn_frames = 0;
};

// d = kMcdScale * || c_ref - c_syn ||, averaged over the DTW path.
McdResult mel_cepstral_distortion(const CepstraMatrix& ref, const CepstraMatrix& syn);

// Throws Errc::sample_rate_mismatch plus anything extraction raises.
McdResult mcd_score(const Signal& ref, const Signal& syn, const MelCepstrumConfig& config);

}  // namespace clsfront
