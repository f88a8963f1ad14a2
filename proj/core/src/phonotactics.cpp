#include "clsfront/phonotactics.hpp"

#include <algorithm>

namespace clsfront {

namespace {

constexpr std::string_view kSchwa = "a";

std::size_t count_vowels(const ClsSequence& seq, const Inventory& inventory) {
  return static_cast<std::size_t>(std::count_if(
      seq.labels.begin(), seq.labels.end(), [&](const auto& l) { return inventory.is_vowel(l); }));
}

void erase_at(ClsSequence& seq, std::size_t i) {
  seq.labels.erase(seq.labels.begin() + static_cast<std::ptrdiff_t>(i));
  seq.nasal_flags.erase(seq.nasal_flags.begin() + static_cast<std::ptrdiff_t>(i));
}

// Consonant run that would form around position i once it is removed.
std::size_t joined_consonant_run(const ClsSequence& seq, std::size_t i, const Inventory& inventory) {
  std::size_t run = 0;
  for (std::size_t j = i; j > 0 && inventory.is_consonant(seq.labels[j - 1]); --j) ++run;
  for (std::size_t j = i + 1; j < seq.size() && inventory.is_consonant(seq.labels[j]); ++j) ++run;
  return run;
}

std::string_view echo_vowel(std::string_view v) {
  if (v == "ai" || v == "ii") return "i";
  if (v == "au" || v == "uu") return "u";
  if (v == "aa") return "a";
  if (v == "ee" || v == "ae") return "e";
  if (v == "oo" || v == "ax") return "o";
  if (v == "ruu") return "ru";
  if (v == "luu") return "lu";
  return v;
}

bool is_sibilant(std::string_view l) { return l == "sh" || l == "sx" || l == "s"; }

}  // namespace

ClsSequence schwa_delete(const ClsSequence& seq, const Inventory& inventory) {
  ClsSequence out = seq;
  if (out.is_break) return out;

  const std::size_t n = out.size();
  if (n >= 2 && out.labels[n - 1] == kSchwa && inventory.is_consonant(out.labels[n - 2]) &&
      count_vowels(out, inventory) >= 2) {
    erase_at(out, n - 1);
  }

  const auto first_vowel = std::find_if(out.labels.begin(), out.labels.end(),
                                        [&](const auto& l) { return inventory.is_vowel(l); });
  const std::size_t first = static_cast<std::size_t>(first_vowel - out.labels.begin());

  std::size_t i = 2;
  while (i + 2 < out.size()) {
    const auto& l = out.labels;
    if (l[i] == kSchwa && i != first && inventory.is_vowel(l[i - 2]) &&
        inventory.is_consonant(l[i - 1]) && inventory.is_consonant(l[i + 1]) &&
        inventory.is_vowel(l[i + 2]) && joined_consonant_run(out, i, inventory) < 3) {
      erase_at(out, i);
      continue;
    }
    ++i;
  }
  return out;
}

ClsSequence visarga_rules(const ClsSequence& seq, const Inventory& inventory) {
  ClsSequence out;
  out.word = seq.word;
  out.script = seq.script;
  out.is_break = seq.is_break;
  const std::size_t n = seq.size();
  for (std::size_t i = 0; i < n; ++i) {
    const std::string& label = seq.labels[i];
    if (label != "hq") {
      out.push_back(label, seq.nasal_flags[i]);
      continue;
    }
    if (i + 1 == n && i > 0 && inventory.is_vowel(seq.labels[i - 1])) {
      out.push_back("h");
      out.push_back(std::string(echo_vowel(seq.labels[i - 1])));
    } else if (i + 1 < n && is_sibilant(seq.labels[i + 1])) {
      out.push_back(seq.labels[i + 1], seq.nasal_flags[i + 1]);
    } else {
      out.push_back("h");
    }
  }
  return out;
}

ClsSequence epenthesis(const ClsSequence& seq, const Inventory& inventory) {
  ClsSequence out = seq;
  const std::size_t n = out.size();
  if (n < 3 || out.is_break) return out;
  const auto& last = out.labels[n - 1];
  if ((last == "i" || last == "u") && inventory.is_consonant(out.labels[n - 2]) &&
      inventory.is_vowel(out.labels[n - 3])) {
    std::swap(out.labels[n - 1], out.labels[n - 2]);
    const bool f = out.nasal_flags[n - 1];
    out.nasal_flags[n - 1] = out.nasal_flags[n - 2];
    out.nasal_flags[n - 2] = f;
  }
  return out;
}

ClsSequence apply_rules(const ClsSequence& seq, const LanguageProfile& profile,
                        const PackRegistry& packs, const Inventory& inventory) {
  if (seq.is_break) return seq;

  ClsSequence out = seq;
  for (const auto& name : profile.rule_packs) {
    const RulePack& pack = packs.get(name);
    if (pack.stage() == Stage::pre_family) out = pack.apply(out);
  }
  if (profile.family == Family::indo_aryan) out = schwa_delete(out, inventory);
  for (const auto& name : profile.rule_packs) {
    const RulePack& pack = packs.get(name);
    if (pack.stage() == Stage::post_family) out = pack.apply(out);
  }
  for (auto& label : out.labels) label = inventory.fallback(label);
  return out;
}

}  // namespace clsfront
