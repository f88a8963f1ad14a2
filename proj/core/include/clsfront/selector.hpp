#pragma once

#include <map>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "clsfront/data_source.hpp"
#include "clsfront/inventory.hpp"
#include "clsfront/profile.hpp"

namespace clsfront {

// An available monolingual synthesizer.
struct SynthesizerProfile {
  std::string name;
  std::string language;
  Family family = Family::indo_aryan;
  std::set<std::string> phone_inventory;  // base labels only
  std::map<std::string, double> priors;   // each in [0, 1]
};

// Throws Errc::malformed_data.
SynthesizerProfile parse_synthesizer(std::string_view text, const Inventory& inventory);

// Every *.json under `dir` (a directory path), sorted by file name.
std::vector<SynthesizerProfile> load_synthesizers(const std::filesystem::path& dir,
                                                  const Inventory& inventory);
// The shipped synthesizer profiles under "synths/".
std::vector<SynthesizerProfile> load_synthesizers(const DataSource& data,
                                                  const Inventory& inventory);

struct RankedCandidate {
  std::string name;
  bool family_match = false;
  double coverage = 0.0;
  double prior_sum = 0.0;
  int rank = 0;
};

// |target ∩ synth| / |target|. Throws Errc::empty_target_inventory.
double coverage(const std::set<std::string>& target, const std::set<std::string>& synth);

// Lexicographic order: family match, coverage, weighted prior sum (all
// descending), then name. prior_sum = Σ candidate.priors[k] · w_k where w_k
// is the target profile's weight for k (1 when absent).
// Throws Errc::no_candidates or Errc::empty_target_inventory.
std::vector<RankedCandidate> rank(const LanguageProfile& target,
                                  const std::set<std::string>& target_phones,
                                  std::span<const SynthesizerProfile> candidates);

}  // namespace clsfront
