#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "clsfront/inventory.hpp"
#include "clsfront/sequence.hpp"

namespace clsfront {

enum class SignKind {
  consonant,
  vowel_independent,
  matra,
  virama,
  nukta,
  anusvara,
  visarga,
  chandrabindu,
  ignore,
};

std::string_view to_string(SignKind k) noexcept;

struct ScriptEntry {
  SignKind kind = SignKind::ignore;
  std::string label;        // consonants, vowels and matras only
  std::string nukta_label;  // explicit base+nukta row; empty means generic rule
};

// Codepoint table for one script.
class ScriptTable {
 public:
  // Parses the JSON table and checks every label against the inventory.
  // Throws Errc::malformed_data.
  static ScriptTable from_json(std::string_view text, const Inventory& inventory);

  Script script() const noexcept { return script_; }
  const ScriptEntry* find(char32_t cp) const noexcept;
  const std::map<char32_t, ScriptEntry>& entries() const noexcept { return entries_; }

 private:
  Script script_ = Script::devanagari;
  std::map<char32_t, ScriptEntry> entries_;
};

enum class Trailing { none, anusvara, visarga };

// Orthographic syllable: consonant cluster, vowel, modifiers.
struct Akshara {
  std::vector<std::string> consonants;
  std::optional<std::string> vowel;  // absent only for a virama-final cluster
  bool nasalized = false;
  Trailing trailing = Trailing::none;
  std::size_t offset = 0;  // byte offset of the akshara in the word

  bool operator==(const Akshara&) const = default;
};

// Converts Indic-script words into raw (pre-rule) CLS sequences.
class ScriptReader {
 public:
  ScriptReader(std::shared_ptr<const Inventory> inventory, std::vector<ScriptTable> tables);

  // `word` must already be normalized. Throws Errc::empty_word,
  // Errc::unknown_codepoint or Errc::misplaced_sign with a byte offset.
  std::vector<Akshara> segment_aksharas(std::string_view word, Script script) const;

  ClsSequence word_to_raw_cls(std::string_view word, Script script) const;

  const ScriptTable& table(Script script) const;
  const Inventory& inventory() const noexcept { return *inventory_; }

  // Homorganic nasal for an anusvara followed by `next` (nullptr when the
  // anusvara is word-final or precedes a vowel).
  const std::string& anusvara_nasal(const std::string* next) const;

 private:
  std::shared_ptr<const Inventory> inventory_;
  std::map<Script, ScriptTable> tables_;
};

}  // namespace clsfront
