#include "clsfront/script_reader.hpp"

#include <json.hpp>

#include "clsfront/errors.hpp"
#include "clsfront/unicode.hpp"

namespace clsfront {

using nlohmann::json;

std::string_view to_string(SignKind k) noexcept {
  switch (k) {
    case SignKind::consonant: return "consonant";
    case SignKind::vowel_independent: return "vowel_independent";
    case SignKind::matra: return "matra";
    case SignKind::virama: return "virama";
    case SignKind::nukta: return "nukta";
    case SignKind::anusvara: return "anusvara";
    case SignKind::visarga: return "visarga";
    case SignKind::chandrabindu: return "chandrabindu";
    case SignKind::ignore: return "ignore";
  }
  return "?";
}

namespace {

SignKind parse_kind(const std::string& text, const std::string& where) {
  for (SignKind k : {SignKind::consonant, SignKind::vowel_independent, SignKind::matra,
                     SignKind::virama, SignKind::nukta, SignKind::anusvara, SignKind::visarga,
                     SignKind::chandrabindu, SignKind::ignore}) {
    if (to_string(k) == text) return k;
  }
  throw Error(Errc::malformed_data, where + ": unknown kind '" + text + "'");
}

void require_category(const Inventory& inventory, const std::string& label, Category category,
                      const std::string& where) {
  const Phone* phone = inventory.find(label);
  if (phone == nullptr) {
    throw Error(Errc::malformed_data, where + ": label '" + label + "' is not in the inventory");
  }
  if (phone->category != category) {
    throw Error(Errc::malformed_data, where + ": label '" + label + "' is not a " +
                                          std::string(to_string(category)));
  }
}

std::string hex(char32_t cp) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "U+%04X", static_cast<unsigned>(cp));
  return buf;
}

}  // namespace

ScriptTable ScriptTable::from_json(std::string_view text, const Inventory& inventory) {
  ScriptTable table;
  try {
    const json doc = json::parse(text);
    if (doc.at("schema_version").get<int>() != 1) {
      throw Error(Errc::malformed_data, "script table: unsupported schema_version");
    }
    table.script_ = script_from_string(doc.at("script").get<std::string>());
    for (const auto& [key, value] : doc.at("entries").items()) {
      const std::string where = std::string(to_string(table.script_)) + " table entry " + key;
      std::size_t used = 0;
      const unsigned long cp = std::stoul(key, &used, 16);
      if (used != key.size() || cp > 0x10FFFF) {
        throw Error(Errc::malformed_data, where + ": key is not a hex codepoint");
      }
      ScriptEntry entry;
      entry.kind = parse_kind(value.at("kind").get<std::string>(), where);
      entry.label = value.value("label", std::string{});
      entry.nukta_label = value.value("nukta", std::string{});
      switch (entry.kind) {
        case SignKind::consonant:
          require_category(inventory, entry.label, Category::consonant, where);
          if (!entry.nukta_label.empty()) {
            require_category(inventory, entry.nukta_label, Category::consonant, where);
          }
          break;
        case SignKind::vowel_independent:
        case SignKind::matra:
          require_category(inventory, entry.label, Category::vowel, where);
          break;
        default:
          if (!entry.label.empty()) {
            throw Error(Errc::malformed_data, where + ": sign kinds carry no label");
          }
      }
      table.entries_.emplace(static_cast<char32_t>(cp), std::move(entry));
    }
  } catch (const json::exception& e) {
    throw Error(Errc::malformed_data, std::string("script table: ") + e.what());
  } catch (const std::invalid_argument&) {
    throw Error(Errc::malformed_data, "script table: key is not a hex codepoint");
  }
  return table;
}

const ScriptEntry* ScriptTable::find(char32_t cp) const noexcept {
  auto it = entries_.find(cp);
  return it == entries_.end() ? nullptr : &it->second;
}

ScriptReader::ScriptReader(std::shared_ptr<const Inventory> inventory,
                           std::vector<ScriptTable> tables)
    : inventory_(std::move(inventory)) {
  for (auto& t : tables) {
    const Script s = t.script();
    tables_.insert_or_assign(s, std::move(t));
  }
}

const ScriptTable& ScriptReader::table(Script script) const {
  auto it = tables_.find(script);
  if (it == tables_.end()) {
    throw Error(Errc::malformed_data, "no table loaded for script " + std::string(to_string(script)));
  }
  return it->second;
}

std::vector<Akshara> ScriptReader::segment_aksharas(std::string_view word, Script script) const {
  const ScriptTable& tbl = table(script);
  const auto cps = decode_utf8(word);

  std::vector<Akshara> out;
  std::optional<Akshara> current;
  const ScriptEntry* last_consonant = nullptr;  // set while a nukta may still attach
  bool open_virama = false;

  auto misplaced = [&](const DecodedCodepoint& cp, std::string_view what) {
    throw Error(Errc::misplaced_sign,
                std::string(what) + " " + hex(cp.value) + " at byte " + std::to_string(cp.offset) +
                    " does not follow a sign it can attach to",
                cp.offset);
  };
  auto flush = [&] {
    if (!current) return;
    if (!current->vowel && !open_virama) current->vowel = "a";
    out.push_back(std::move(*current));
    current.reset();
    open_virama = false;
    last_consonant = nullptr;
  };
  // The akshara a dependent sign attaches to: a consonant cluster that is not
  // waiting on another consonant and has no vowel sign yet.
  auto bare_cluster = [&] {
    return current && !current->consonants.empty() && !current->vowel && !open_virama &&
           current->trailing == Trailing::none && !current->nasalized;
  };

  for (const DecodedCodepoint& cp : cps) {
    const ScriptEntry* entry = tbl.find(cp.value);
    if (entry == nullptr) {
      throw Error(Errc::unknown_codepoint,
                  hex(cp.value) + " at byte " + std::to_string(cp.offset) + " is not part of the " +
                      std::string(to_string(script)) + " table",
                  cp.offset);
    }
    switch (entry->kind) {
      case SignKind::consonant:
        if (current && open_virama) {
          current->consonants.push_back(entry->label);
          open_virama = false;
        } else {
          flush();
          current = Akshara{};
          current->offset = cp.offset;
          current->consonants.push_back(entry->label);
        }
        last_consonant = entry;
        break;
      case SignKind::nukta:
        if (!bare_cluster() || last_consonant == nullptr) misplaced(cp, "nukta");
        // Without an explicit row the base letter's label stands.
        if (!last_consonant->nukta_label.empty()) {
          current->consonants.back() = last_consonant->nukta_label;
        }
        last_consonant = nullptr;
        break;
      case SignKind::virama:
        if (!bare_cluster()) misplaced(cp, "virama");
        open_virama = true;
        last_consonant = nullptr;
        break;
      case SignKind::matra:
        if (!bare_cluster()) misplaced(cp, "vowel sign");
        current->vowel = entry->label;
        last_consonant = nullptr;
        break;
      case SignKind::vowel_independent:
        flush();
        current = Akshara{};
        current->offset = cp.offset;
        current->vowel = entry->label;
        break;
      case SignKind::anusvara:
      case SignKind::visarga:
        if (!current || open_virama || current->trailing != Trailing::none) {
          misplaced(cp, entry->kind == SignKind::anusvara ? "anusvara" : "visarga");
        }
        current->trailing =
            entry->kind == SignKind::anusvara ? Trailing::anusvara : Trailing::visarga;
        last_consonant = nullptr;
        break;
      case SignKind::chandrabindu:
        if (!current || open_virama || current->nasalized ||
            current->trailing != Trailing::none) {
          misplaced(cp, "chandrabindu");
        }
        current->nasalized = true;
        last_consonant = nullptr;
        break;
      case SignKind::ignore:
        break;
    }
  }
  flush();

  if (out.empty()) throw Error(Errc::empty_word, "word has no phonetic content", 0);
  return out;
}

const std::string& ScriptReader::anusvara_nasal(const std::string* next) const {
  static const std::string velar = "ng", palatal = "nj", retroflex = "nx", dental = "n",
                           labial = "m";
  if (next == nullptr) return labial;
  const Phone* phone = inventory_->find(*next);
  if (phone == nullptr || phone->category != Category::consonant) return labial;
  switch (phone->features.place) {
    case Place::velar:
    case Place::uvular: return velar;
    case Place::palatal: return palatal;
    case Place::retroflex: return retroflex;
    case Place::dental: return dental;
    case Place::labial:
    case Place::glottal:
    case Place::not_applicable: return labial;
  }
  return labial;
}

ClsSequence ScriptReader::word_to_raw_cls(std::string_view word, Script script) const {
  if (word.empty()) throw Error(Errc::empty_word, "empty word", 0);
  const std::vector<Akshara> aksharas = segment_aksharas(word, script);

  ClsSequence seq;
  seq.word = std::string(word);
  seq.script = script;
  for (std::size_t i = 0; i < aksharas.size(); ++i) {
    const Akshara& ak = aksharas[i];
    for (const auto& c : ak.consonants) seq.push_back(c);
    if (ak.vowel) seq.push_back(*ak.vowel, ak.nasalized);
    switch (ak.trailing) {
      case Trailing::anusvara: {
        const std::string* next = nullptr;
        if (i + 1 < aksharas.size() && !aksharas[i + 1].consonants.empty()) {
          next = &aksharas[i + 1].consonants.front();
        }
        seq.push_back(anusvara_nasal(next));
        break;
      }
      case Trailing::visarga:
        seq.push_back("hq");
        break;
      case Trailing::none:
        break;
    }
  }
  return seq;
}

}  // namespace clsfront
