#include "clsfront/inventory.hpp"

#include <set>

#include <json.hpp>

#include "clsfront/errors.hpp"

namespace clsfront {

using nlohmann::json;

std::string_view to_string(Category c) noexcept {
  switch (c) {
    case Category::vowel: return "vowel";
    case Category::consonant: return "consonant";
    case Category::modifier: return "modifier";
  }
  return "?";
}

std::string_view to_string(Length l) noexcept {
  switch (l) {
    case Length::short_vowel: return "short";
    case Length::long_vowel: return "long";
    case Length::not_applicable: return "n/a";
  }
  return "?";
}

std::string_view to_string(Place p) noexcept {
  switch (p) {
    case Place::velar: return "velar";
    case Place::palatal: return "palatal";
    case Place::retroflex: return "retroflex";
    case Place::dental: return "dental";
    case Place::labial: return "labial";
    case Place::glottal: return "glottal";
    case Place::uvular: return "uvular";
    case Place::not_applicable: return "n/a";
  }
  return "?";
}

namespace {

template <typename Enum, std::size_t N>
Enum parse_enum(const std::string& text, const Enum (&values)[N],
                const std::string& where) {
  for (Enum v : values) {
    if (to_string(v) == text) return v;
  }
  throw Error(Errc::malformed_data, where + ": unexpected value '" + text + "'");
}

constexpr Category kCategories[] = {Category::vowel, Category::consonant, Category::modifier};
constexpr Length kLengths[] = {Length::short_vowel, Length::long_vowel, Length::not_applicable};
constexpr Place kPlaces[] = {Place::velar, Place::palatal, Place::retroflex, Place::dental,
                             Place::labial, Place::glottal, Place::uvular,
                             Place::not_applicable};

Phone parse_phone(const json& j, std::size_t index) {
  const std::string where = "phones[" + std::to_string(index) + "]";
  Phone p;
  p.label = j.at("label").get<std::string>();
  p.category = parse_enum(j.at("category").get<std::string>(), kCategories, where + ".category");
  const json& f = j.at("features");
  p.features.length = parse_enum(f.at("length").get<std::string>(), kLengths, where + ".features.length");
  p.features.aspirated = f.at("aspirated").get<bool>();
  p.features.voiced = f.at("voiced").get<bool>();
  p.features.place = parse_enum(f.at("place").get<std::string>(), kPlaces, where + ".features.place");
  p.features.nasal = f.at("nasal").get<bool>();
  p.extended = j.at("extended").get<bool>();
  if (auto it = j.find("fallback"); it != j.end() && !it->is_null()) {
    p.fallback = it->get<std::string>();
  }
  if (auto it = j.find("rationale"); it != j.end() && !it->is_null()) {
    p.rationale = it->get<std::string>();
  }
  return p;
}

}  // namespace

Inventory::Inventory(std::vector<Phone> phones, std::vector<PlaceProximity> proximity,
                     std::string version)
    : phones_(std::move(phones)), proximity_(std::move(proximity)), version_(std::move(version)) {
  for (std::size_t i = 0; i < phones_.size(); ++i) {
    index_.emplace(phones_[i].label, i);  // first occurrence wins; duplicates are reported by validation
  }
}

Inventory Inventory::from_json(std::string_view text) {
  try {
    const json doc = json::parse(text);
    if (!doc.contains("schema_version")) {
      throw Error(Errc::malformed_data, "inventory: missing schema_version");
    }
    if (doc.at("schema_version").get<int>() != 1) {
      throw Error(Errc::malformed_data, "inventory: unsupported schema_version");
    }
    std::vector<Phone> phones;
    const json& list = doc.at("phones");
    for (std::size_t i = 0; i < list.size(); ++i) phones.push_back(parse_phone(list[i], i));

    std::vector<PlaceProximity> proximity;
    if (auto it = doc.find("place_proximity"); it != doc.end()) {
      for (const json& row : *it) {
        proximity.push_back({parse_enum(row.at("from").get<std::string>(), kPlaces, "place_proximity.from"),
                             parse_enum(row.at("to").get<std::string>(), kPlaces, "place_proximity.to"),
                             row.value("rationale", std::string{})});
      }
    }
    return Inventory(std::move(phones), std::move(proximity), doc.at("version").get<std::string>());
  } catch (const json::exception& e) {
    throw Error(Errc::malformed_data, std::string("inventory: ") + e.what());
  }
}

const Phone* Inventory::find(std::string_view label) const noexcept {
  auto it = index_.find(label);
  return it == index_.end() ? nullptr : &phones_[it->second];
}

const Phone& Inventory::lookup(std::string_view label) const {
  if (const Phone* p = find(label)) return *p;
  throw Error(Errc::unknown_label, "'" + std::string(label) + "' is not in the inventory");
}

const std::string& Inventory::fallback(std::string_view label) const {
  const Phone& p = lookup(label);
  if (p.extended && p.fallback) return *p.fallback;
  return p.label;
}

bool Inventory::is_base(std::string_view label) const noexcept {
  const Phone* p = find(label);
  return p != nullptr && !p->extended;
}

bool Inventory::is_vowel(std::string_view label) const noexcept {
  const Phone* p = find(label);
  return p != nullptr && p->category == Category::vowel;
}

bool Inventory::is_consonant(std::string_view label) const noexcept {
  const Phone* p = find(label);
  return p != nullptr && p->category == Category::consonant;
}

std::vector<std::string> Inventory::base_labels() const {
  std::vector<std::string> out;
  for (const Phone& p : phones_) {
    if (!p.extended) out.push_back(p.label);
  }
  return out;
}

ValidationReport validate_inventory(const Inventory& inventory) {
  ValidationReport report;
  auto flag = [&](std::string message) { report.violations.push_back(std::move(message)); };

  std::set<std::string, std::less<>> seen;
  std::size_t base = 0, vowels = 0, consonants = 0;
  for (const Phone& p : inventory.phones()) {
    if (p.label.empty()) flag("empty label");
    if (!seen.insert(p.label).second) flag("duplicate label '" + p.label + "'");
    if (p.extended) continue;
    ++base;
    if (p.category == Category::vowel) ++vowels;
    if (p.category == Category::consonant) ++consonants;
    if (p.fallback && *p.fallback != p.label) {
      flag("base label '" + p.label + "' declares a fallback");
    }
  }
  if (base != Inventory::kBaseLabelCount) {
    flag("base count != 72 (found " + std::to_string(base) + ")");
  }
  if (vowels < 15 || vowels > 18) {
    flag("base vowel count outside 15-18 (found " + std::to_string(vowels) + ")");
  }
  if (consonants < 35 || consonants > 38) {
    flag("base consonant count outside 35-38 (found " + std::to_string(consonants) + ")");
  }

  for (const Phone& p : inventory.phones()) {
    if (p.category == Category::vowel &&
        p.features.length == Length::not_applicable) {
      flag("vowel '" + p.label + "' has no length");
    }
    if (!p.extended) continue;
    if (!p.fallback) {
      flag("extended label '" + p.label + "' has no fallback");
      continue;
    }
    const Phone* target = inventory.find(*p.fallback);
    if (target == nullptr) {
      flag("extended label '" + p.label + "' falls back to unknown label '" + *p.fallback + "'");
      continue;
    }
    if (target->extended) {
      flag("extended label '" + p.label + "' falls back to extended label '" + target->label +
           "' (fallback must reach a base label in one step)");
    }
    if (p.rationale.empty()) {
      flag("extended label '" + p.label + "' has no rationale");
    }
    if (p.category != target->category) {
      flag("extended label '" + p.label + "' changes category on fallback");
    }
    if (p.features.length != target->features.length) {
      flag("extended label '" + p.label + "' changes vowel length on fallback");
    }
    const Place from = p.features.place;
    const Place to = target->features.place;
    if (from != to) {
      bool documented = false;
      for (const PlaceProximity& row : inventory.proximity()) {
        if (row.from == from && row.to == to && !row.rationale.empty()) documented = true;
      }
      if (!documented) {
        flag("extended label '" + p.label + "' falls back across undocumented places " +
             std::string(to_string(from)) + " -> " + std::string(to_string(to)));
      }
    }
  }
  return report;
}

}  // namespace clsfront
