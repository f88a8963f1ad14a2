#include "clsfront/selector.hpp"

#include <algorithm>
#include <tuple>

#include <json.hpp>

#include "clsfront/errors.hpp"

namespace clsfront {

using nlohmann::json;

SynthesizerProfile parse_synthesizer(std::string_view text, const Inventory& inventory) {
  SynthesizerProfile s;
  try {
    const json doc = json::parse(text);
    s.name = doc.at("name").get<std::string>();
    s.language = doc.value("language", s.name);
    s.family = family_from_string(doc.at("family").get<std::string>());
    for (const auto& label : doc.at("phone_inventory").get<std::vector<std::string>>()) {
      if (!inventory.is_base(label)) {
        throw Error(Errc::malformed_data,
                    "synthesizer '" + s.name + "': '" + label + "' is not a base label");
      }
      s.phone_inventory.insert(label);
    }
    if (auto it = doc.find("priors"); it != doc.end()) {
      for (const auto& [key, value] : it->items()) {
        const double v = value.get<double>();
        if (!(v >= 0.0 && v <= 1.0)) {
          throw Error(Errc::malformed_data,
                      "synthesizer '" + s.name + "': prior " + key + " outside [0,1]");
        }
        s.priors.emplace(key, v);
      }
    }
  } catch (const json::exception& e) {
    throw Error(Errc::malformed_data, std::string("synthesizer profile: ") + e.what());
  }
  return s;
}

std::vector<SynthesizerProfile> load_synthesizers(const std::filesystem::path& dir,
                                                  const Inventory& inventory) {
  if (!std::filesystem::is_directory(dir)) {
    throw Error(Errc::io_error, "synthesizer directory " + dir.string() + " does not exist");
  }
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".json") {
      files.push_back(entry.path());
    }
  }
  std::sort(files.begin(), files.end());
  std::vector<SynthesizerProfile> out;
  for (const auto& f : files) out.push_back(parse_synthesizer(read_file(f), inventory));
  return out;
}

std::vector<SynthesizerProfile> load_synthesizers(const DataSource& data,
                                                  const Inventory& inventory) {
  std::vector<SynthesizerProfile> out;
  for (const auto& path : data.list_json("synths")) {
    out.push_back(parse_synthesizer(data.read(path), inventory));
  }
  return out;
}

double coverage(const std::set<std::string>& target, const std::set<std::string>& synth) {
  if (target.empty()) {
    throw Error(Errc::empty_target_inventory, "target phone set is empty");
  }
  std::size_t shared = 0;
  for (const auto& label : target) shared += synth.count(label);
  return static_cast<double>(shared) / static_cast<double>(target.size());
}

std::vector<RankedCandidate> rank(const LanguageProfile& target,
                                  const std::set<std::string>& target_phones,
                                  std::span<const SynthesizerProfile> candidates) {
  if (candidates.empty()) throw Error(Errc::no_candidates, "no synthesizer candidates");

  std::vector<RankedCandidate> out;
  out.reserve(candidates.size());
  for (const SynthesizerProfile& c : candidates) {
    RankedCandidate r;
    r.name = c.name;
    r.family_match = c.family == target.family;
    r.coverage = coverage(target_phones, c.phone_inventory);
    for (const auto& [key, value] : c.priors) {
      auto w = target.priors.find(key);
      r.prior_sum += value * (w == target.priors.end() ? 1.0 : w->second);
    }
    out.push_back(std::move(r));
  }
  std::sort(out.begin(), out.end(), [](const RankedCandidate& a, const RankedCandidate& b) {
    return std::forward_as_tuple(b.family_match, b.coverage, b.prior_sum, a.name) <
           std::forward_as_tuple(a.family_match, a.coverage, a.prior_sum, b.name);
  });
  for (std::size_t i = 0; i < out.size(); ++i) out[i].rank = static_cast<int>(i + 1);
  return out;
}

}  // namespace clsfront
