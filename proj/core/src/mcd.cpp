#include "clsfront/mcd.hpp"

#include <string>

#include "clsfront/errors.hpp"

namespace clsfront {

McdResult mel_cepstral_distortion(const CepstraMatrix& ref, const CepstraMatrix& syn) {
  const AlignmentPath path = dtw(ref, syn);
  double total = 0.0;
  for (const auto& [i, j] : path.pairs) {
    total += kMcdScale * frame_distance(ref.frames, static_cast<Eigen::Index>(i), syn.frames,
                                        static_cast<Eigen::Index>(j));
  }
  McdResult result;
  result.path_length = path.pairs.size();
  result.mcd_db = total / static_cast<double>(path.pairs.size());
  result.ref_frames = static_cast<std::size_t>(ref.count());
  result.syn_frames = static_cast<std::size_t>(syn.count());
  return result;
}

McdResult mcd_score(const Signal& ref, const Signal& syn, const MelCepstrumConfig& config) {
  if (ref.sample_rate != syn.sample_rate) {
    throw Error(Errc::sample_rate_mismatch, std::to_string(ref.sample_rate) + " Hz vs " +
                                                std::to_string(syn.sample_rate) + " Hz");
  }
  return mel_cepstral_distortion(mel_cepstra(ref, config), mel_cepstra(syn, config));
}

}  // namespace clsfront
