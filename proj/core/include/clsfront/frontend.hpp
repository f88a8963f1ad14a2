#pragma once

#include <filesystem>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "clsfront/data_source.hpp"
#include "clsfront/inventory.hpp"
#include "clsfront/phonotactics.hpp"
#include "clsfront/profile.hpp"
#include "clsfront/rule_pack.hpp"
#include "clsfront/script_reader.hpp"

namespace clsfront {

struct TextToken {
  std::string text;
  std::size_t offset = 0;  // byte offset in the source text
  bool is_break = false;   // a run of punctuation
};

// Splits on Unicode whitespace; punctuation runs become break tokens.
// Throws Errc::invalid_utf8.
std::vector<TextToken> tokenize(std::string_view text);

// The loaded text pipeline: inventory, script tables and rule packs.
// Immutable once loaded and cheap to copy; safe to share across threads.
class Frontend {
 public:
  // Loads and validates everything under `data`. An inventory that fails
  // validation raises Errc::invalid_inventory listing the violations.
  static Frontend load(const DataSource& data);

  const Inventory& inventory() const noexcept { return *inventory_; }
  const ScriptReader& reader() const noexcept { return *reader_; }
  const PackRegistry& packs() const noexcept { return *packs_; }
  const DataSource& data() const noexcept { return data_; }

  LanguageProfile load_profile(const std::filesystem::path& path) const;
  // A shipped profile name ("sanskrit") or a path to a profile file.
  LanguageProfile profile(std::string_view name_or_path) const;
  std::vector<std::string> profile_names() const;

  ClsSequence apply_rules(const ClsSequence& seq, const LanguageProfile& profile) const;

  // tokenize -> normalize -> exceptions or read + rules, per word, in order.
  // Errors carry the word index and the byte offset into `text`.
  std::vector<ClsSequence> parse_text(std::string_view text, const LanguageProfile& profile) const;

  // Labels the profile can emit after rules and fallback, sorted. Modifiers
  // are excluded.
  std::vector<std::string> reachable_phones(const LanguageProfile& profile) const;

 private:
  Frontend() = default;

  DataSource data_ = DataSource::embedded();
  std::shared_ptr<const Inventory> inventory_;
  std::shared_ptr<const ScriptReader> reader_;
  std::shared_ptr<const PackRegistry> packs_;
};

}  // namespace clsfront
