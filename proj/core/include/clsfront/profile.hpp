#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "clsfront/inventory.hpp"
#include "clsfront/rule_pack.hpp"
#include "clsfront/sequence.hpp"

namespace clsfront {

// Phonotactic rule family. Deliberately independent of the script a
// language is written in.
enum class Family { indo_aryan, dravidian };

std::string_view to_string(Family f) noexcept;  // "IA" / "DR"
// Throws Errc::malformed_data.
Family family_from_string(std::string_view text);

struct LanguageProfile {
  std::string name;
  Script script = Script::devanagari;
  Family family = Family::indo_aryan;
  std::vector<std::string> rule_packs;
  // NFC grapheme -> final base labels, consulted before parsing.
  std::map<std::string, std::vector<std::string>, std::less<>> exceptions;
  // Weights applied to synthesizer priors of the same name; absent means 1.
  std::map<std::string, double, std::less<>> priors;
  std::string notes;
};

// Parses and validates a profile document. Unknown fields are rejected.
// Throws Errc::malformed_profile naming the offending field path, or
// Errc::unknown_rule_pack.
LanguageProfile parse_profile(std::string_view text, const PackRegistry& packs,
                              const Inventory& inventory);

}  // namespace clsfront
