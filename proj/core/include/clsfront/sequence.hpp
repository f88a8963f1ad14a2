#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace clsfront {

enum class Script { devanagari, kannada, telugu };

std::string_view to_string(Script s) noexcept;
// Throws Errc::malformed_data for unknown names.
Script script_from_string(std::string_view name);

// One word's CLS labels with per-label nasalization. Break markers carry the
// punctuation run in `word` and a single pause label.
struct ClsSequence {
  std::vector<std::string> labels;
  std::vector<bool> nasal_flags;
  std::string word;
  Script script = Script::devanagari;
  bool is_break = false;

  std::size_t size() const noexcept { return labels.size(); }
  bool empty() const noexcept { return labels.empty(); }

  void push_back(std::string label, bool nasal = false) {
    labels.push_back(std::move(label));
    nasal_flags.push_back(nasal);
  }

  bool operator==(const ClsSequence&) const = default;
};

// Convenience for tests and callers building sequences by hand.
ClsSequence make_sequence(std::vector<std::string> labels,
                          Script script = Script::devanagari);

std::string join_labels(const std::vector<std::string>& labels,
                        std::string_view separator = "-");

}  // namespace clsfront
