#include "clsfront/frontend.hpp"

#include <optional>
#include <set>

#include "clsfront/errors.hpp"
#include "clsfront/unicode.hpp"

namespace clsfront {

namespace fs = std::filesystem;

std::vector<TextToken> tokenize(std::string_view text) {
  std::vector<TextToken> out;
  std::optional<TextToken> current;
  auto close = [&] {
    if (current) out.push_back(std::move(*current));
    current.reset();
  };
  for (const DecodedCodepoint& cp : decode_utf8(text)) {
    if (is_whitespace(cp.value)) {
      close();
      continue;
    }
    const bool punct = is_punctuation(cp.value);
    if (current && current->is_break != punct) close();
    if (!current) current = TextToken{std::string{}, cp.offset, punct};
    current->text.append(text.substr(cp.offset, cp.length));
  }
  close();
  return out;
}

Frontend Frontend::load(const DataSource& data) {
  Frontend f;
  f.data_ = data;

  auto inventory = std::make_shared<Inventory>(Inventory::from_json(data.read("inventory.json")));
  const ValidationReport report = validate_inventory(*inventory);
  if (!report.ok()) {
    std::string message = "inventory from " + data.describe() + " is invalid:";
    for (const auto& v : report.violations) message += "\n  " + v;
    throw Error(Errc::invalid_inventory, message);
  }
  f.inventory_ = inventory;

  std::vector<ScriptTable> tables;
  for (const auto& path : data.list_json("scripts")) {
    tables.push_back(ScriptTable::from_json(data.read(path), *inventory));
  }
  f.reader_ = std::make_shared<ScriptReader>(inventory, std::move(tables));

  auto packs = std::make_shared<PackRegistry>();
  for (const auto& path : data.list_json("packs")) {
    packs->add(RulePack::from_json(data.read(path), *inventory));
  }
  f.packs_ = packs;
  return f;
}

LanguageProfile Frontend::load_profile(const fs::path& path) const {
  return parse_profile(read_file(path), *packs_, *inventory_);
}

LanguageProfile Frontend::profile(std::string_view name_or_path) const {
  const fs::path as_path(name_or_path);
  if (as_path.extension() == ".json" || fs::is_regular_file(as_path)) {
    return load_profile(as_path);
  }
  const std::string relative = "profiles/" + std::string(name_or_path) + ".json";
  if (!data_.exists(relative)) {
    throw Error(Errc::io_error, "no profile named '" + std::string(name_or_path) + "' in " +
                                    data_.describe());
  }
  return parse_profile(data_.read(relative), *packs_, *inventory_);
}

std::vector<std::string> Frontend::profile_names() const {
  std::vector<std::string> out;
  for (const auto& path : data_.list_json("profiles")) {
    const fs::path p(path);
    out.push_back(p.stem().string());
  }
  return out;
}

ClsSequence Frontend::apply_rules(const ClsSequence& seq, const LanguageProfile& profile) const {
  return clsfront::apply_rules(seq, profile, *packs_, *inventory_);
}

std::vector<ClsSequence> Frontend::parse_text(std::string_view text,
                                              const LanguageProfile& profile) const {
  std::vector<ClsSequence> out;
  const auto tokens = tokenize(text);
  out.reserve(tokens.size());
  std::size_t word_index = 0;
  for (const TextToken& token : tokens) {
    if (token.is_break) {
      ClsSequence brk;
      brk.word = token.text;
      brk.script = profile.script;
      brk.is_break = true;
      brk.push_back("sil");
      out.push_back(std::move(brk));
      continue;
    }
    try {
      std::string word = normalize_text(token.text);
      if (word.empty()) continue;
      if (auto it = profile.exceptions.find(word); it != profile.exceptions.end()) {
        ClsSequence seq = make_sequence(it->second, profile.script);
        seq.word = std::move(word);
        out.push_back(std::move(seq));
      } else {
        out.push_back(apply_rules(reader_->word_to_raw_cls(word, profile.script), profile));
      }
    } catch (const Error& e) {
      const std::size_t at = token.offset + e.offset().value_or(0);
      throw Error(e.code(),
                  "word " + std::to_string(word_index + 1) + " '" + token.text + "' at byte " +
                      std::to_string(at) + ": " + e.what(),
                  at);
    }
    ++word_index;
  }
  return out;
}

std::vector<std::string> Frontend::reachable_phones(const LanguageProfile& profile) const {
  std::set<std::string> raw;
  for (const auto& [cp, entry] : reader_->table(profile.script).entries()) {
    switch (entry.kind) {
      case SignKind::consonant:
        raw.insert(entry.label);
        if (!entry.nukta_label.empty()) raw.insert(entry.nukta_label);
        break;
      case SignKind::vowel_independent:
      case SignKind::matra:
        raw.insert(entry.label);
        break;
      case SignKind::visarga:
        raw.insert("hq");
        break;
      case SignKind::anusvara:
        for (const char* nasal : {"ng", "nj", "nx", "n", "m"}) raw.insert(nasal);
        break;
      default:
        break;
    }
  }
  raw.insert("a");
  for (const auto& name : profile.rule_packs) {
    for (const auto& label : packs_->get(name).output_labels()) raw.insert(label);
  }
  for (const auto& [word, labels] : profile.exceptions) raw.insert(labels.begin(), labels.end());

  std::set<std::string> reachable;
  for (const auto& label : raw) {
    const std::string& base = inventory_->fallback(label);
    if (inventory_->lookup(base).category != Category::modifier) reachable.insert(base);
  }
  return {reachable.begin(), reachable.end()};
}

}  // namespace clsfront
